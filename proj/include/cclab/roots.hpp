#pragma once

#include <optional>
#include <vector>

#include "cclab/rational.hpp"
#include "cclab/unipoly.hpp"

namespace cclab {

// Closed interval with rational endpoints. lo == hi marks an exact root.
struct RationalInterval {
  Rational lo;
  Rational hi;

  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& t) const { return lo <= t && t <= hi; }
  bool overlaps(const RationalInterval& o) const { return lo <= o.hi && o.lo <= hi; }
};

struct RealRootReport {
  std::size_t count = 0;
  std::vector<RationalInterval> isolating_intervals;  // ascending, pairwise disjoint
  bool square_free_applied = false;
};

struct RootIsolationOptions {
  // Refine each isolating interval until its width is below this.
  Rational max_width{1, 1000000000};
};

/// Signed remainder sequence p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k).
/// Each member is scaled by a positive constant, which keeps sign variations.
class SturmSequence {
 public:
  explicit SturmSequence(const UniPoly& p);

  /// Number of distinct real roots in the half-open interval (a, b].
  std::size_t count(const Rational& a, const Rational& b) const;
  /// Number of distinct real roots on the whole line.
  std::size_t count_all() const;
  std::size_t variations_at(const Rational& t) const;
  std::size_t variations_at_infinity(int direction) const;

  const std::vector<UniPoly>& sequence() const { return seq_; }

 private:
  std::vector<UniPoly> seq_;
};

/// Strict bound B with every real root in (-B, B).
Rational cauchy_root_bound(const UniPoly& p);

/// Distinct real roots of p on the whole line. Throws InputError for p = 0.
RealRootReport sturm_real_root_count(const UniPoly& p, const RootIsolationOptions& opts = {});
/// Distinct real roots in the closed interval [a, b].
RealRootReport sturm_real_root_count(const UniPoly& p, const Rational& a, const Rational& b,
                                     const RootIsolationOptions& opts = {});
/// Distinct roots in (0, inf); every interval has positive endpoints.
RealRootReport positive_real_roots(const UniPoly& p, const RootIsolationOptions& opts = {});

/// Shrinks an isolating interval of a square-free polynomial to `max_width`.
RationalInterval refine_root(const SturmSequence& sturm, const UniPoly& square_free,
                             RationalInterval iv, const Rational& max_width);

}  // namespace cclab
