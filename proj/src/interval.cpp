#include "cclab/interval.hpp"

#include <algorithm>

namespace cclab {

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  const Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

RationalInterval scale(const RationalInterval& a, const Rational& c) {
  if (sgn(c) >= 0) return {a.lo * c, a.hi * c};
  return {a.hi * c, a.lo * c};
}

RationalInterval pow(const RationalInterval& a, unsigned exponent) {
  if (exponent == 0) return {1, 1};
  const Rational lo = pow(a.lo, exponent);
  const Rational hi = pow(a.hi, exponent);
  if (exponent % 2 == 1) return {lo, hi};
  if (sgn(a.lo) >= 0) return {lo, hi};
  if (sgn(a.hi) <= 0) return {hi, lo};
  return {0, std::max(lo, hi)};
}

RationalInterval evaluate(const Poly2& p, const RationalInterval& bx, const RationalInterval& by) {
  RationalInterval acc{0, 0};
  if (p.is_zero()) return acc;
  const auto di = static_cast<unsigned>(p.degree_in(0));
  const auto dj = static_cast<unsigned>(p.degree_in(1));
  std::vector<RationalInterval> px;
  std::vector<RationalInterval> py;
  for (unsigned k = 0; k <= di; ++k) px.push_back(pow(bx, k));
  for (unsigned k = 0; k <= dj; ++k) py.push_back(pow(by, k));
  for (const auto& [e, c] : p.terms()) acc = acc + scale(px[e.i] * py[e.j], c);
  return acc;
}

}  // namespace cclab
