#pragma once

#include "cclab/poly2.hpp"
#include "cclab/roots.hpp"

namespace cclab {

// Exact interval arithmetic over rational endpoints; used to enclose the range
// of a polynomial on a box.
RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
RationalInterval scale(const RationalInterval& a, const Rational& c);
RationalInterval pow(const RationalInterval& a, unsigned exponent);

/// Enclosure of { p(s, t) : s in bx, t in by }.
RationalInterval evaluate(const Poly2& p, const RationalInterval& bx, const RationalInterval& by);

inline bool contains_zero(const RationalInterval& iv) { return iv.lo <= 0 && 0 <= iv.hi; }

}  // namespace cclab
