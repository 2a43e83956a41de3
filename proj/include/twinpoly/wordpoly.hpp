#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "twinpoly/natural.hpp"

namespace twinpoly::wordpoly {

// Dense polynomial kernel over a prime field F_p with p < 2^31: coefficients
// are reduced residues in machine words, little-endian, no trailing zeros.
// The zero polynomial is the empty vector. This is the hot path behind the
// Rabin oracle and the census enumeration; the generic big-coefficient
// routines in poly.cpp are the reference implementation it is tested against.
using WPoly = std::vector<std::uint64_t>;

void normalize(WPoly& f);

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p);

// Schoolbook product with a Karatsuba switch above degree 64.
WPoly mul(const WPoly& a, const WPoly& b, std::uint64_t p);

std::pair<WPoly, WPoly> divmod(const WPoly& a, const WPoly& b, std::uint64_t p);

WPoly rem(const WPoly& a, const WPoly& b, std::uint64_t p);

// Monic gcd.
WPoly gcd(WPoly a, WPoly b, std::uint64_t p);

// base^exponent mod modulus, square-and-multiply over the exponent bits.
WPoly powmod(const WPoly& base, const Natural& exponent, const WPoly& modulus,
             std::uint64_t p);

}  // namespace twinpoly::wordpoly
