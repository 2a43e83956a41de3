#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "twinpoly/arith.hpp"
#include "twinpoly/field.hpp"

namespace twinpoly {

// Polynomial over a FieldCtx: dense little-endian coefficients, no trailing
// zeros. The zero polynomial has no coefficients and degree() == -1.
class Poly {
public:
    Poly() = default;

    static Poly zero(FieldCtxPtr ctx);
    static Poly one(FieldCtxPtr ctx);
    static Poly x(FieldCtxPtr ctx);
    static Poly constant(FieldElement c);
    static Poly monomial(FieldCtxPtr ctx, std::size_t degree, FieldElement lead);
    static Poly from_coeffs(FieldCtxPtr ctx, std::vector<FieldElement> coeffs);
    static Poly from_ints(const FieldCtxPtr& ctx, const std::vector<long long>& coeffs);

    const FieldCtxPtr& ctx() const { return ctx_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monic() const;

    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    FieldElement coeff(std::size_t i) const;  // zero beyond the degree
    const FieldElement& lead() const;

    Poly monic() const;
    FieldElement evaluate(const FieldElement& at) const;

    bool operator==(const Poly& rhs) const;
    bool operator!=(const Poly& rhs) const = default;

private:
    Poly(FieldCtxPtr ctx, std::vector<FieldElement> coeffs)
        : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {}

    FieldCtxPtr ctx_;
    std::vector<FieldElement> coeffs_;
};

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly neg(const Poly& a);
Poly mul(const Poly& a, const Poly& b);

struct DivModResult {
    Poly quotient;
    Poly remainder;
};
DivModResult divmod(const Poly& a, const Poly& b);
Poly rem(const Poly& a, const Poly& b);

// Monic generator of the ideal (a, b); gcd(f, 0) = monic(f).
Poly gcd(const Poly& a, const Poly& b);

// base^exponent mod modulus. The exponent is a Natural on purpose: the Rabin
// oracle raises X to q^deg, which reaches sizes like 7^203.
Poly powmod(const Poly& base, const Natural& exponent, const Poly& modulus);

// f(X^t). The degree multiplies by t exactly; guarded by max_degree since the
// dense representation materializes every zero coefficient.
Poly substitute_power(const Poly& f, const Natural& t,
                      std::uint64_t max_degree = 1u << 21);

// Rabin's irreducibility test: f of degree n over F_q is irreducible iff
// X^(q^n) = X (mod f) and gcd(X^(q^(n/r)) - X, f) = 1 for every prime r | n.
bool is_irreducible(const Poly& f);

// Multiplicative order of X in F_q[X]/(f) for irreducible f with f(0) != 0,
// given a factored multiple of the order.
Natural order_of(const Poly& f, const Natural& multiple,
                 const Factorization& multiple_factored);
Natural order_of(const Poly& f, const Natural& multiple);

// Same computation without the irreducibility precondition: the order of X in
// the unit group of the quotient ring, defined whenever f(0) != 0. Used where
// theory supplies the order of a root without certifying the quotient is a
// field.
Natural order_of_x_in_quotient(const Poly& f, const Natural& multiple,
                               const Factorization& multiple_factored);

// Monic polynomials of degree n in deterministic counter order: index digits
// base q select the non-leading coefficients, constant coefficient fastest.
Natural monic_count(const FieldCtxPtr& ctx, unsigned n);
Poly monic_from_index(const FieldCtxPtr& ctx, unsigned n, std::uint64_t index);
std::vector<Poly> enumerate_monic(const FieldCtxPtr& ctx, unsigned n,
                                  std::uint64_t budget = 6561);

// Descending-power display form, e.g. "X^3 + 2*X + 2".
std::string to_string(const Poly& f);

namespace detail {
// Generic big-coefficient routines, valid for every field. They are the
// serial reference implementations the word kernel is checked against.
Poly mul_generic(const Poly& a, const Poly& b);
DivModResult divmod_generic(const Poly& a, const Poly& b);
Poly powmod_generic(const Poly& base, const Natural& exponent, const Poly& modulus);
Poly gcd_generic(Poly a, Poly b);
}  // namespace detail

}  // namespace twinpoly
