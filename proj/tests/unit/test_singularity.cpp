#include <doctest.h>

#include <cmath>
#include <vector>

#include "cclab/catalogue.hpp"
#include "cclab/errors.hpp"
#include "cclab/interval.hpp"
#include "cclab/parser.hpp"
#include "cclab/singularity.hpp"
#include "helpers.hpp"

using namespace cclab;

namespace {

const VarNames XY{"x", "y"};
const VarNames UV{"u", "v"};

Poly2 px(const std::string& s, const VarNames& v = XY) { return parse_polynomial(s, v); }

// Cells of a uniform grid over [-10, 10]^2 on which both f and g change sign
// at the corners. A common real zero inside a cell forces neither sign change,
// but a transversal one usually shows up here; used as an independent oracle.
struct GridScan {
  std::size_t both_change = 0;
  std::vector<std::pair<double, double>> cells;
};

GridScan sign_grid(const Poly2& f, const Poly2& g, int n = 2001) {
  const CompiledPoly2 cf(f), cg(g);
  const double h = 20.0 / (n - 1);
  std::vector<int> sf_prev(n), sg_prev(n), sf_cur(n), sg_cur(n);
  auto sgnd = [](double v) { return (v > 0) - (v < 0); };
  GridScan out;
  for (int i = 0; i < n; ++i) {
    const double x = -10.0 + i * h;
    for (int j = 0; j < n; ++j) {
      const double y = -10.0 + j * h;
      sf_cur[j] = sgnd(cf(x, y));
      sg_cur[j] = sgnd(cg(x, y));
    }
    if (i > 0) {
      for (int j = 0; j + 1 < n; ++j) {
        auto changes = [&](const std::vector<int>& a, const std::vector<int>& b) {
          const int c[4] = {a[j], a[j + 1], b[j], b[j + 1]};
          bool neg = false, pos = false, zero = false;
          for (int s : c) {
            neg |= s < 0;
            pos |= s > 0;
            zero |= s == 0;
          }
          return zero || (neg && pos);
        };
        if (changes(sf_prev, sf_cur) && changes(sg_prev, sg_cur)) {
          ++out.both_change;
          out.cells.emplace_back(x - h / 2, -10.0 + (j + 0.5) * h);
        }
      }
    }
    std::swap(sf_prev, sf_cur);
    std::swap(sg_prev, sg_cur);
  }
  return out;
}

}  // namespace

TEST_CASE("verify_equilibrium") {
  const EquilibriumCertificate s1 = verify_equilibrium(testing::system("s1"), 0, 0);
  CHECK(s1.valid());
  REQUIRE(s1.R_at_point.has_value());
  CHECK(std::get<Rational>(*s1.R_at_point) == -1);

  const EquilibriumCertificate c = verify_equilibrium(testing::system("center"), 0, 0);
  CHECK(c.valid());
  CHECK(std::get<Rational>(*c.R_at_point) == 1);

  const EquilibriumCertificate off = verify_equilibrium(testing::system("s1"), 1, 0);
  CHECK_FALSE(off.valid());
  CHECK(off.P_value == 0);
  CHECK(off.Q_value == 1);
}

TEST_CASE("sign of R near an equilibrium") {
  CHECK(sign_of_R_near_equilibrium(testing::system("s1"), 0, 0) == NeighborhoodSign::negative);
  CHECK(sign_of_R_near_equilibrium(testing::system("s2"), 0, 0) == NeighborhoodSign::positive);
  CHECK(sign_of_R_near_equilibrium(testing::system("s1a"), 0, 0) == NeighborhoodSign::negative);
  CHECK(sign_of_R_near_equilibrium(testing::system("center"), 0, 0) == NeighborhoodSign::positive);
  CHECK_THROWS_AS(sign_of_R_near_equilibrium(testing::system("s1"), 1, 0), InputError);
  // x' = y, y' = -x + x^2 has equilibria at (0,0) and (1,0); G = 4 (1 + (1 - 2x)^2) never vanishes.
  const PlanarSystem two = testing::make_system("y", "-x + x^2");
  CHECK(sign_of_R_near_equilibrium(two, 1, 0) != NeighborhoodSign::not_continuous);
}

TEST_CASE("real_solutions_2x2 examples") {
  const SubsystemReport axes = real_solutions_2x2(px("x"), px("y"));
  CHECK(axes.status == SolutionStatus::isolated_points);
  REQUIRE(axes.points.size() == 1);
  CHECK(axes.points[0].exact());
  CHECK(axes.points[0].x.lo == 0);
  CHECK(axes.points[0].y.lo == 0);

  const SubsystemReport shifted = real_solutions_2x2(px("2*x"), px("y + 1"));
  REQUIRE(shifted.points.size() == 1);
  CHECK(shifted.points[0].x.lo == 0);
  CHECK(shifted.points[0].y.lo == -1);

  const SubsystemReport S1 = real_solutions_2x2(px("24*u^2 + 8*u*v + v^2 - 8", UV), px("4*u*v + v^2 + 4", UV));
  CHECK(S1.status == SolutionStatus::empty_certified);
  CHECK(S1.points.empty());
  const SubsystemReport S2 = real_solutions_2x2(px("8*u^2 + 8*u*v + 3*v^2", UV), px("2*u^2 + u*v - 1", UV));
  CHECK(S2.status == SolutionStatus::empty_certified);
  CHECK(S2.points.empty());

  // The eliminants of S1 are recorded, whatever their real roots.
  CHECK(S1.eliminants.size() == 2);

  const SubsystemReport common = real_solutions_2x2(px("x*(x - y)"), px("(x - y)*(y + 2)"));
  CHECK(common.status == SolutionStatus::degenerate_branch);
  CHECK_THROWS_AS(real_solutions_2x2(Poly2(XY), Poly2(XY)), InputError);
}

TEST_CASE("irrational solutions are enclosed in verified boxes") {
  // Circle of radius sqrt 2 against the axis: the solutions are (+-sqrt 2, 0).
  const SubsystemReport r = real_solutions_2x2(px("x^2 + y^2 - 2"), px("y"));
  REQUIRE(r.points.size() == 2);
  for (const auto& p : r.points) {
    CHECK(p.verified);
    const Rational lo2 = p.x.lo * p.x.lo, hi2 = p.x.hi * p.x.hi;
    const bool encloses = p.x.lo < 0 ? (lo2 >= 2 && hi2 <= 2) : (lo2 <= 2 && hi2 >= 2);
    CHECK(encloses);
    CHECK(p.y.contains(0));
  }
  CHECK(r.points[0].x.hi < 0);
  CHECK(r.points[1].x.lo > 0);
}

TEST_CASE("empty subsystems survive the sign-grid oracle") {
  const SubsystemReport S1 = real_solutions_2x2(px("24*u^2 + 8*u*v + v^2 - 8", UV), px("4*u*v + v^2 + 4", UV));
  const SubsystemReport S2 = real_solutions_2x2(px("8*u^2 + 8*u*v + 3*v^2", UV), px("2*u^2 + u*v - 1", UV));
  for (const auto* s : {&S1, &S2}) {
    REQUIRE(s->status == SolutionStatus::empty_certified);
    CHECK(sign_grid(s->f, s->g).both_change == 0);
  }
  const SingularLocusReport s1 = singular_locus(testing::system("s1"));
  for (const auto& sub : s1.subsystems) {
    REQUIRE(sub.status == SolutionStatus::empty_certified);
    CHECK(sign_grid(sub.f, sub.g).both_change == 0);
  }
}

TEST_CASE("the sign-grid oracle sees transversal zeros") {
  // Sanity check of the oracle itself on the s1a blocks, which have eight zeros each.
  const SingularLocusReport s1a = singular_locus(testing::system("s1a"));
  for (const auto& sub : s1a.subsystems) {
    CHECK(sub.points.size() == 8);
    CHECK(sign_grid(sub.f, sub.g).both_change > 0);
  }
}

TEST_CASE("singular locus of the catalogue systems") {
  const SingularLocusReport s2 = singular_locus(testing::system("s2"));
  CHECK(s2.empty_certified());
  CHECK(s2.points.empty());

  const SingularLocusReport s1 = singular_locus(testing::system("s1"));
  REQUIRE(s1.subsystems.size() == 2);
  CHECK(s1.subsystems[0].f == px("3*x^2 + y^2 - 1"));
  CHECK(s1.subsystems[0].g == px("2*x*y + 1"));
  CHECK(s1.empty_certified());

  const SingularLocusReport c = singular_locus(testing::system("center"));
  REQUIRE(c.points.size() == 1);
  CHECK(c.certified_divergences() == 1);
  const DivergencePoint& p = c.points[0];
  CHECK(p.status == DivergenceStatus::certified);
  CHECK(p.location.exact());
  CHECK(p.location.x.lo == 0);
  CHECK(p.location.y.lo == -1);

  const SingularLocusReport s1a = singular_locus(testing::system("s1a"));
  CHECK(s1a.points.size() == 16);
  CHECK(s1a.certified_divergences() == 16);

  CHECK_THROWS_AS(singular_locus(testing::make_system("1", "2")), DegenerateMetricError);
}

TEST_CASE("certified divergences: denominator straddles zero, a derivative of N does not") {
  for (const char* key : {"center", "s1a"}) {
    const PlanarSystem sys = testing::system(key);
    const SingularLocusReport rep = singular_locus(sys);
    const RationalFunction r = scalar_curvature(sys);
    for (const auto& p : rep.points) {
      if (p.status != DivergenceStatus::certified) continue;
      CAPTURE(key);
      CHECK(p.location.verified);
      REQUIRE(p.numerator_order.has_value());
      CHECK(*p.numerator_order <= 3);
      const RationalInterval d = evaluate(r.denominator, p.location.x, p.location.y);
      CHECK(contains_zero(d));
      CHECK(contains_zero(p.denominator_range));
      // The recorded order is the lowest at which some partial derivative of N excludes 0.
      bool excluded = false;
      const int order = *p.numerator_order;
      for (int i = 0; i <= order && !excluded; ++i) {
        Poly2 dn = r.numerator;
        for (int k = 0; k < i; ++k) dn = partial_derivative(dn, 0);
        for (int k = 0; k < order - i; ++k) dn = partial_derivative(dn, 1);
        excluded = !contains_zero(evaluate(dn, p.location.x, p.location.y));
      }
      CHECK(excluded);
    }
  }
}

TEST_CASE("assertion reports") {
  const std::vector<std::pair<Rational, Rational>> origin{{Rational(0), Rational(0)}};
  const AssertionReport s1 = assertion_AB_report(testing::system("s1"), origin);
  CHECK(s1.assertion_A == AssertionA::fails_R_negative);
  CHECK(s1.assertion_B_count == 0);

  const AssertionReport s1a = assertion_AB_report(testing::system("s1a"), origin);
  CHECK(s1a.assertion_A == AssertionA::fails_R_negative);
  CHECK(s1a.assertion_B_count == 16);
  CHECK(s1a.symmetric_pairs == 8);

  const AssertionReport s2 = assertion_AB_report(testing::system("s2"), origin);
  CHECK(s2.assertion_A == AssertionA::fails_no_singularity);
  CHECK(s2.assertion_B_count == 0);

  const AssertionReport c = assertion_AB_report(testing::system("center"), origin);
  CHECK(c.assertion_A == AssertionA::holds);
  CHECK(c.assertion_B_count == 1);
  CHECK(c.symmetric_pairs == 0);
}

TEST_CASE("B count does not depend on the order of the metric blocks") {
  // Swapping the variables swaps the two blocks (P_x, Q_x) and (P_y, Q_y).
  const Matrix2 swap{{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}};
  const std::vector<std::pair<Rational, Rational>> origin{{Rational(0), Rational(0)}};
  for (const auto& key : testing::catalogue().keys()) {
    const PlanarSystem sys = testing::system(key);
    const PlanarSystem swapped = transform(sys, swap, {Rational(0), Rational(0)}, sys.vars());
    CAPTURE(key);
    CHECK(assertion_AB_report(sys, origin).assertion_B_count ==
          assertion_AB_report(swapped, origin).assertion_B_count);
  }
}

TEST_CASE("equilibrium search") {
  const EquilibriumSearch s1 = find_equilibria(testing::system("s1"));
  CHECK(s1.zero_dimensional);
  REQUIRE(s1.exact.size() == 1);
  CHECK(s1.exact[0] == std::pair<Rational, Rational>{0, 0});
  CHECK(s1.approximate.empty());

  const EquilibriumSearch two = find_equilibria(testing::make_system("y", "-x + x^2"));
  CHECK(two.exact.size() == 2);

  const EquilibriumSearch irr = find_equilibria(testing::make_system("y", "x^2 - 2"));
  CHECK(irr.exact.empty());
  CHECK(irr.approximate.size() == 2);
}
