#include "twinpoly/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace twinpoly {

Natural Factorization::value() const {
    Natural v = 1;
    for (const auto& e : entries) v *= natural_pow(e.prime, e.exponent);
    return v;
}

bool Factorization::contains(const Natural& prime) const {
    return std::any_of(entries.begin(), entries.end(),
                       [&](const FactorEntry& e) { return e.prime == prime; });
}

std::vector<Natural> divisors(const Factorization& f) {
    std::vector<Natural> ds{1};
    for (const auto& e : f.entries) {
        const std::size_t base = ds.size();
        Natural pk = 1;
        for (unsigned i = 1; i <= e.exponent; ++i) {
            pk *= e.prime;
            for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

Natural modpow(const Natural& base, const Natural& exponent, const Natural& modulus) {
    if (modulus < 1) throw DomainError("modpow: modulus must be >= 1");
    if (base < 0 || exponent < 0) throw DomainError("modpow: negative input");
    Natural r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
    if (modulus == 0) throw DomainError("powmod_u64: modulus must be >= 1");
    std::uint64_t r = 1 % modulus;
    base %= modulus;
    while (exponent) {
        if (exponent & 1) r = mulmod_u64(r, base, modulus);
        base = mulmod_u64(base, base, modulus);
        exponent >>= 1;
    }
    return r;
}

namespace {

// Strong probable prime test to base a; n odd, n > 2, n - 1 = d * 2^s.
bool sprp_u64(std::uint64_t n, std::uint64_t d, int s, std::uint64_t a) {
    a %= n;
    if (a == 0) return true;
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Deterministic for all n < 2^64 with the first twelve primes as witnesses.
bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u})
        if (!sprp_u64(n, d, s, a)) return false;
    return true;
}

bool sprp_mpz(const Natural& n, const Natural& d, unsigned long s, const Natural& a) {
    Natural base = a % n;
    if (base == 0) return true;
    Natural x = modpow(base, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(const Natural& n, const MillerRabinConfig& cfg) {
    if (n < 2) return false;
    if (fits_u64(n)) return is_prime_u64(to_u64(n));

    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u})
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;

    Natural d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;

    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(static_cast<unsigned long>(cfg.seed));
    for (int round = 0; round < cfg.rounds; ++round) {
        Natural a = rng.get_z_range(n - 3) + 2;  // uniform in [2, n-2]
        if (!sprp_mpz(n, d, s, a)) return false;
    }
    return true;
}

namespace {

const std::vector<std::uint64_t>& small_primes_100k() {
    static const std::vector<std::uint64_t> ps = primes_up_to(100000);
    return ps;
}

// Brent-cycle Pollard rho with batched gcds. Returns a nontrivial factor of
// composite odd n, or 0 if `remaining` iterations ran out. Deterministic:
// the polynomial constant starts at 1 and increments on failure.
Natural pollard_brent(const Natural& n, std::uint64_t& remaining) {
    constexpr std::uint64_t kBatch = 128;
    for (Natural c = 1; ; ++c) {
        Natural y = 2, x, ys, q = 1, g = 1;
        std::uint64_t r = 1;
        while (g == 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
            for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
                ys = y;
                const std::uint64_t steps = std::min(kBatch, r - k);
                if (steps > remaining) return 0;
                remaining -= steps;
                for (std::uint64_t i = 0; i < steps; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            r *= 2;
        }
        if (g == n) {
            // The batch overshot a factor; replay one step at a time.
            do {
                if (remaining == 0) return 0;
                --remaining;
                ys = (ys * ys + c) % n;
                mpz_gcd(g.get_mpz_t(), Natural(abs(x - ys)).get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
        // Degenerate cycle for this c; try the next polynomial.
    }
}

void split_into(const Natural& n, std::vector<Natural>& primes_out, std::uint64_t& remaining) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes_out.push_back(n);
        return;
    }
    Natural d = pollard_brent(n, remaining);
    if (d == 0) {
        Factorization partial;
        std::sort(primes_out.begin(), primes_out.end());
        for (const auto& p : primes_out) {
            if (!partial.entries.empty() && partial.entries.back().prime == p)
                ++partial.entries.back().exponent;
            else
                partial.entries.push_back({p, 1});
        }
        throw IncompleteFactorizationError(std::move(partial), n);
    }
    split_into(d, primes_out, remaining);
    split_into(n / d, primes_out, remaining);
}

}  // namespace

Factorization factorize(const Natural& n, const FactorBudget& budget) {
    if (n < 1) throw DomainError("factorize: argument must be >= 1");
    Factorization result;
    Natural m = n;
    for (std::uint64_t p : small_primes_100k()) {
        if (p > budget.trial_division_bound) break;
        if (natural_from_u64(p) * p > m) break;
        if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        result.entries.push_back({natural_from_u64(p), e});
    }
    if (m > 1) {
        // m has no factor below the trial cutoff (or above sqrt); rho time.
        std::vector<Natural> primes;
        std::uint64_t remaining = budget.rho_iterations;
        try {
            split_into(m, primes, remaining);
        } catch (IncompleteFactorizationError& e) {
            // Merge the trial-division part into the partial result.
            Factorization merged = result;
            merged.entries.insert(merged.entries.end(), e.partial.entries.begin(),
                                  e.partial.entries.end());
            std::sort(merged.entries.begin(), merged.entries.end(),
                      [](const FactorEntry& a, const FactorEntry& b) { return a.prime < b.prime; });
            throw IncompleteFactorizationError(std::move(merged), e.unfactored);
        }
        std::sort(primes.begin(), primes.end());
        for (const auto& p : primes) {
            if (!result.entries.empty() && result.entries.back().prime == p)
                ++result.entries.back().exponent;
            else
                result.entries.push_back({p, 1});
        }
    }
    return result;
}

int moebius(const Natural& n, const FactorBudget& budget) {
    if (n < 1) throw DomainError("moebius: argument must be >= 1");
    const Factorization f = factorize(n, budget);
    for (const auto& e : f.entries)
        if (e.exponent >= 2) return 0;
    return f.entries.size() % 2 == 0 ? 1 : -1;
}

Natural mult_order(const Natural& a, const Natural& modulus,
                   const Factorization& multiple_of_order) {
    if (modulus < 1) throw DomainError("mult_order: modulus must be >= 1");
    if (modulus == 1) return 1;  // trivial group
    Natural g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
    if (g != 1) throw DomainError("mult_order: arguments are not coprime");

    Natural order = multiple_of_order.value();
    if (modpow(a, order, modulus) != 1)
        throw NotAMultipleError("mult_order: supplied exponent " + to_decimal(order) +
                                " is not a multiple of the order");
    for (const auto& e : multiple_of_order.entries) {
        for (unsigned i = 0; i < e.exponent; ++i) {
            Natural candidate = order / e.prime;
            if (modpow(a, candidate, modulus) != 1) break;
            order = candidate;
        }
    }
    return order;
}

namespace {

// Simple sieve used for base primes only.
std::vector<std::uint64_t> simple_sieve(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound < 2) return out;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

constexpr std::uint64_t kSegmentSize = 1u << 20;

}  // namespace

void primes_in_range(std::uint64_t lo, std::uint64_t hi,
                     const std::vector<std::uint64_t>& base_primes,
                     const std::function<void(std::uint64_t)>& fn) {
    if (hi <= lo) return;
    if (lo < 2) lo = 2;
    std::vector<bool> composite(hi - lo, false);
    for (std::uint64_t p : base_primes) {
        if (p * p >= hi) break;
        std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
        for (std::uint64_t j = start; j < hi; j += p) composite[j - lo] = true;
    }
    for (std::uint64_t i = lo; i < hi; ++i)
        if (!composite[i - lo]) fn(i);
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound < 2) return out;
    const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(bound))) + 1;
    const auto base = simple_sieve(root);
    for (std::uint64_t lo = 2; lo <= bound; lo += kSegmentSize) {
        const std::uint64_t hi = std::min(bound, lo + kSegmentSize - 1) + 1;
        primes_in_range(lo, hi, base, [&](std::uint64_t p) { out.push_back(p); });
    }
    return out;
}

}  // namespace twinpoly
