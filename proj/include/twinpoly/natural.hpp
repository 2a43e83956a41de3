#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "twinpoly/errors.hpp"

namespace twinpoly {

// Arbitrary-precision nonnegative integer. Exponents such as p^p - 1 and
// Q = (p^p - 1)/(p - 1) overflow machine words already for p >= 7, so every
// integer that crosses a module boundary is a Natural. GMP keeps the value in
// canonical form; all external serialization is the decimal string.
using Natural = mpz_class;

// Exact rational, used for census main terms and deviations.
using Rational = mpq_class;

inline std::string to_decimal(const Natural& n) { return n.get_str(10); }

inline Natural from_decimal(const std::string& s) {
    Natural n;
    if (s.empty() || mpz_set_str(n.get_mpz_t(), s.c_str(), 10) != 0 || n < 0)
        throw DomainError("not a decimal natural number: '" + s + "'");
    return n;
}

inline bool fits_u64(const Natural& n) {
    return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Natural& n) {
    if (!fits_u64(n)) throw DomainError("value does not fit in 64 bits: " + to_decimal(n));
    if constexpr (sizeof(unsigned long) >= 8) return mpz_get_ui(n.get_mpz_t());
    Natural hi = n >> 32;
    return (static_cast<std::uint64_t>(mpz_get_ui(hi.get_mpz_t())) << 32) |
           (mpz_get_ui(n.get_mpz_t()) & 0xffffffffu);
}

inline Natural natural_from_u64(std::uint64_t v) {
    Natural n;
    mpz_import(n.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return n;
}

// base^exp as an exact Natural (no modulus).
inline Natural natural_pow(const Natural& base, std::uint64_t exp) {
    Natural r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

inline std::size_t bit_length(const Natural& n) {
    return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

inline bool bit_test(const Natural& n, std::size_t i) {
    return mpz_tstbit(n.get_mpz_t(), i) != 0;
}

}  // namespace twinpoly
