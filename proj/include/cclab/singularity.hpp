#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cclab/curvature.hpp"
#include "cclab/roots.hpp"
#include "cclab/system.hpp"

namespace cclab {

struct EquilibriumCertificate {
  Rational x;
  Rational y;
  Rational P_value;
  Rational Q_value;
  std::optional<CurvatureValue> R_at_point;  // empty when the metric is degenerate

  bool valid() const { return sgn(P_value) == 0 && sgn(Q_value) == 0; }
};

EquilibriumCertificate verify_equilibrium(const PlanarSystem& sys, const Rational& x, const Rational& y);

enum class NeighborhoodSign { positive, negative, not_continuous, zero_at_point };
const char* to_string(NeighborhoodSign s);

/// Sign of R on a neighbourhood of a verified equilibrium. A nonzero value at a
/// point where the denominator does not vanish keeps its sign nearby by
/// continuity; `zero_at_point` means the value is 0 and no sign is implied.
/// Throws InputError if the point is not an equilibrium.
NeighborhoodSign sign_of_R_near_equilibrium(const PlanarSystem& sys, const Rational& x, const Rational& y);

// A real solution enclosed in a box. Point intervals mean exact coordinates.
// `verified` means the box provably contains exactly one solution (exact
// evaluation for points, a Krawczyk test otherwise).
struct IsolatedSolution {
  RationalInterval x;
  RationalInterval y;
  bool verified = false;

  bool exact() const { return x.is_point() && y.is_point(); }
  bool overlaps(const IsolatedSolution& o) const { return x.overlaps(o.x) && y.overlaps(o.y); }
};

enum class SolutionStatus { empty_certified, isolated_points, degenerate_branch };
const char* to_string(SolutionStatus s);

struct Eliminant {
  int eliminated = 0;  // index of the eliminated variable
  UniPoly polynomial;  // in the other variable
  std::size_t real_roots = 0;
  // Leading coefficients in the eliminated variable vanish simultaneously with
  // the eliminant only at these many real values; each was checked exactly or
  // left to box verification.
  std::size_t leading_locus_candidates = 0;
  std::vector<std::string> notes;
};

struct SolveOptions {
  RootIsolationOptions isolation;
  // Candidate boxes are shrunk until either equation is excluded or the box is
  // narrower than this.
  Rational verify_width{1, BigInt(1) << 100};
};

struct SubsystemReport {
  Poly2 f;
  Poly2 g;
  SolutionStatus status = SolutionStatus::empty_certified;
  std::vector<IsolatedSolution> points;
  std::vector<Eliminant> eliminants;
  std::vector<std::string> notes;
};

/// Real common zeros of f and g by resultants in both directions, Sturm root
/// isolation and interval verification of candidate boxes. Emptiness is
/// claimed when an eliminant has no real root, or when every box built from the
/// real roots of both eliminants is excluded by exact interval evaluation.
/// Throws InputError when both polynomials are zero.
SubsystemReport real_solutions_2x2(const Poly2& f, const Poly2& g, const SolveOptions& opts = {});

enum class DivergenceStatus { certified, indeterminate };

const char* to_string(DivergenceStatus s);

struct DivergencePoint {
  IsolatedSolution location;
  DivergenceStatus status = DivergenceStatus::indeterminate;
  RationalInterval numerator_range;
  RationalInterval denominator_range;
  // Order of a partial derivative of N proven nonzero on the box (certified points only).
  std::optional<int> numerator_order;
  std::vector<std::size_t> subsystems;  // which SOS blocks vanish here
};

struct SingularLocusReport {
  std::vector<SubsystemReport> subsystems;  // index 0: (P_x, Q_x); 1: (P_y, Q_y)
  std::vector<DivergencePoint> points;
  bool empty_certified() const;
  bool has_degenerate_branch() const;
  std::size_t certified_divergences() const;
};

/// Real zeros of the curvature denominator 2 G^2 via G = 0 <=> {P_x = Q_x = 0}
/// or {P_y = Q_y = 0}. A zero is certified as a divergence when N vanishes
/// there to lower order than the denominator (some derivative of N of order
/// at most 3 is nonzero on the isolating box).
/// Throws DegenerateMetricError when G vanishes identically.
SingularLocusReport singular_locus(const PlanarSystem& sys, const SolveOptions& opts = {});

struct EquilibriumSearch {
  bool zero_dimensional = false;
  std::vector<std::pair<Rational, Rational>> exact;
  std::vector<IsolatedSolution> approximate;  // irrational equilibria, boxes only
};

/// Equilibria from real_solutions_2x2(P, Q); only isolated solutions are kept.
EquilibriumSearch find_equilibria(const PlanarSystem& sys, const SolveOptions& opts = {});

enum class AssertionA { holds, fails_R_negative, fails_no_singularity, fails_indeterminate };
const char* to_string(AssertionA a);

struct AssertionReport {
  AssertionA assertion_A = AssertionA::fails_indeterminate;
  std::size_t assertion_B_count = 0;
  std::size_t symmetric_points = 0;  // certified p != 0 with -p also certified
  std::size_t symmetric_pairs = 0;
  std::vector<NeighborhoodSign> equilibrium_signs;
  std::vector<std::string> notes;
};

AssertionReport assertion_AB_report(const PlanarSystem& sys, const std::vector<std::pair<Rational, Rational>>& equilibria,
                                    const SingularLocusReport& locus);
AssertionReport assertion_AB_report(const PlanarSystem& sys,
                                    const std::vector<std::pair<Rational, Rational>>& equilibria);

}  // namespace cclab
