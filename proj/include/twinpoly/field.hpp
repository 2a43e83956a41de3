#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "twinpoly/arith.hpp"
#include "twinpoly/natural.hpp"

namespace twinpoly {

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

// Element of F_{p^k}: k coordinates in [0, p), little-endian in the power
// basis of the modulus root. Value type; arithmetic lives on FieldCtx.
class FieldElement {
public:
    FieldElement() = default;

    const FieldCtxPtr& owner() const { return owner_; }
    const std::vector<Natural>& coords() const { return coords_; }
    bool is_zero() const;

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const = default;

private:
    friend class FieldCtx;
    FieldElement(FieldCtxPtr owner, std::vector<Natural> coords)
        : owner_(std::move(owner)), coords_(std::move(coords)) {}

    FieldCtxPtr owner_;
    std::vector<Natural> coords_;
};

// A finite field F_{p^k}. Prime fields are the k = 1 fast path; extensions
// are quotient rings F_p[t]/(modulus) with a monic irreducible modulus.
// Immutable after construction and safe to share across threads.
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
public:
    // F_{p^k}. For k > 1 the modulus is the lexicographically smallest monic
    // irreducible of degree k over F_p (coefficient vectors compared
    // low-degree-first), certified by the Rabin oracle. Deterministic, so
    // serialized elements are portable between runs.
    static FieldCtxPtr make(const Natural& p, unsigned k = 1);

    // Extension with an explicitly supplied monic modulus (little-endian
    // coefficients, length k+1). The modulus is certified irreducible.
    static FieldCtxPtr make(const Natural& p, std::vector<Natural> modulus_coeffs);

    const Natural& characteristic() const { return p_; }
    unsigned extension_degree() const { return k_; }
    const Natural& size() const { return q_; }
    const std::vector<Natural>& modulus() const { return modulus_; }

    bool same_field(const FieldCtx& other) const {
        return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
    }

    // Machine-word fast path: prime field with p < 2^31. Extension fields and
    // larger characteristics take the Natural route.
    bool is_word_prime() const { return k_ == 1 && word_; }
    std::uint64_t word_char() const { return pw_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_integer(const Natural& v) const;  // v mod p, as a constant
    FieldElement from_int(long long v) const;
    FieldElement from_coords(std::vector<Natural> coords) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement inv(const FieldElement& a) const;
    FieldElement pow(const FieldElement& a, const Natural& e) const;

    // Base-p counter order over the coordinates: index 0 is zero, and for a
    // prime field index i is the residue i.
    FieldElement element_at(std::uint64_t index) const;
    std::uint64_t index_of(const FieldElement& a) const;

private:
    FieldCtx(Natural p, unsigned k, std::vector<Natural> modulus_coeffs);

    void check_owned(const FieldElement& a) const;
    void check_pair(const FieldElement& a, const FieldElement& b) const;

    Natural p_;
    unsigned k_;
    std::vector<Natural> modulus_;  // empty iff k == 1
    Natural q_;
    bool word_ = false;
    std::uint64_t pw_ = 0;
};

// True iff a is in (F_q^x)^k, i.e. a^((q-1)/gcd(k, q-1)) = 1. Zero counts as
// a k-th power (0 = 0^k).
bool is_kth_power(const FieldElement& a, const Natural& k);

// True iff a = -4c^4 for some c. In odd characteristic this tests whether
// -a/4 is a fourth power; in characteristic 2 the set -4F^4 is {0}.
bool in_minus_four_fourth_powers(const FieldElement& a);

// All q elements exactly once, in base-p counter order.
std::vector<FieldElement> enumerate_elements(const FieldCtxPtr& ctx,
                                             std::uint64_t budget = 1u << 20);

std::string to_string(const FieldElement& a);

}  // namespace twinpoly
