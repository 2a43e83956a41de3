#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "twinpoly/errors.hpp"
#include "twinpoly/natural.hpp"

namespace twinpoly {

struct FactorEntry {
    Natural prime;
    unsigned exponent = 0;
    bool operator==(const FactorEntry&) const = default;
};

// Complete factorization of a Natural: primes strictly increasing, every
// prime certified by is_prime, product of prime^exponent equal to the value.
struct Factorization {
    std::vector<FactorEntry> entries;

    Natural value() const;
    bool contains(const Natural& prime) const;
    bool operator==(const Factorization&) const = default;
};

// All divisors of the factored value, ascending.
std::vector<Natural> divisors(const Factorization& f);

struct MillerRabinConfig {
    // Rounds of strong-probable-prime testing for inputs >= 2^64. Below 2^64
    // the fixed witness set {2,3,5,7,11,13,17,19,23,29,31,37} is deterministic.
    int rounds = 40;
    std::uint64_t seed = 0x5eed5eed5eed5eedULL;
};

struct FactorBudget {
    std::uint64_t trial_division_bound = 100000;
    std::uint64_t rho_iterations = 100000000;
};

// Factorization ran out of budget. Carries everything found so far; the
// library never returns a silently partial factorization.
class IncompleteFactorizationError : public BudgetError {
public:
    IncompleteFactorizationError(Factorization partial_, Natural unfactored_)
        : BudgetError("factorization work budget exceeded; unfactored cofactor " +
                      to_decimal(unfactored_)),
          partial(std::move(partial_)),
          unfactored(std::move(unfactored_)) {}

    Factorization partial;
    Natural unfactored;  // composite (or 1) remainder
};

// base^exponent mod modulus. O(bit_length(exponent)) multiplications.
Natural modpow(const Natural& base, const Natural& exponent, const Natural& modulus);

bool is_prime(const Natural& n, const MillerRabinConfig& cfg = {});

// Trial division below budget.trial_division_bound, then Pollard rho with
// Brent cycle detection and batched gcds. Every reported prime passes
// is_prime; running out of budget raises IncompleteFactorizationError.
Factorization factorize(const Natural& n, const FactorBudget& budget = {});

// 0 if a square divides n, else (-1)^(number of prime factors).
int moebius(const Natural& n, const FactorBudget& budget = {});

// Exact multiplicative order of a modulo modulus, given a factored multiple
// of the order. Starts from the multiple and divides out prime factors while
// the power stays 1.
Natural mult_order(const Natural& a, const Natural& modulus,
                   const Factorization& multiple_of_order);

// All primes <= bound, increasing. Segmented Eratosthenes, memory bounded by
// the segment size rather than the bound.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

// Visits every prime in [lo, hi) in increasing order. base_primes must hold
// all primes <= sqrt(hi - 1); segments drive the parallel scan kernels.
void primes_in_range(std::uint64_t lo, std::uint64_t hi,
                     const std::vector<std::uint64_t>& base_primes,
                     const std::function<void(std::uint64_t)>& fn);

// Word-size modular arithmetic used by the sieve-scan kernels.
inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);

}  // namespace twinpoly
