#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cclab/errors.hpp"
#include "cclab/poly2.hpp"
#include "cclab/unipoly.hpp"

namespace cclab {

namespace detail {

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const UniPoly& p) { return p.is_zero(); }
inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }
inline UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) { return exact_div(a, b); }

}  // namespace detail

/// Determinant by fraction-free (Bareiss) elimination. `Ring` must support
/// +, -, * and exact division through detail::exact_quotient; `one` is the
/// multiplicative identity.
template <typename Ring>
Ring bareiss_determinant(std::vector<std::vector<Ring>> a, const Ring& one) {
  const std::size_t n = a.size();
  if (n == 0) return one;
  bool negate = false;
  Ring prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (detail::is_zero(a[k][k])) {
      std::size_t swap = k + 1;
      while (swap < n && detail::is_zero(a[swap][k])) ++swap;
      if (swap == n) return Ring{};
      std::swap(a[k], a[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Ring t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = detail::exact_quotient(t, prev);
      }
    }
    prev = a[k][k];
  }
  Ring det = a[n - 1][n - 1];
  if (negate) det = -det;
  return det;
}

/// Sylvester matrix of two coefficient lists given highest power first is
/// built internally; inputs are lowest power first.
template <typename Ring>
std::vector<std::vector<Ring>> sylvester_matrix(const std::vector<Ring>& f, const std::vector<Ring>& g,
                                                const Ring& zero) {
  const std::size_t m = f.size() - 1;
  const std::size_t n = g.size() - 1;
  const std::size_t size = m + n;
  std::vector<std::vector<Ring>> s(size, std::vector<Ring>(size, zero));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = f[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = g[n - k];
  return s;
}

/// Resultant of two univariate polynomials with respect to their variable.
Rational resultant(const UniPoly& f, const UniPoly& g);

/// Sylvester resultant eliminating `eliminate`; the result is a polynomial in
/// the remaining variable. Formal degrees are the actual degrees in the
/// eliminated variable. Throws InputError when both inputs are zero.
UniPoly resultant(const Poly2& f, const Poly2& g, const std::string& eliminate);
UniPoly resultant(const Poly2& f, const Poly2& g, int eliminate_index);

}  // namespace cclab
