// One PASS/FAIL line per acceptance criterion, each with its runtime limit.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <variant>

#include "cclab/catalogue.hpp"
#include "cclab/curvature.hpp"
#include "cclab/dynamics.hpp"
#include "cclab/hilbert.hpp"
#include "cclab/parser.hpp"
#include "cclab/singularity.hpp"
#include "cclab/system.hpp"
#include "properties.hpp"

using namespace cclab;

namespace {

const Catalogue& catalogue() {
  static const Catalogue cat = Catalogue::load(CCLAB_TEST_DATA_DIR);
  return cat;
}

PlanarSystem sys(const std::string& key) { return parse_system(catalogue().at(key).source); }

const std::vector<std::pair<Rational, Rational>> origin{{Rational(0), Rational(0)}};

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) detail = what;
    ok = false;
  }
};

bool run(int id, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream limit;
  limit << "runtime " << secs << " s exceeds " << limit_seconds << " s";
  out.require(secs < limit_seconds, limit.str());
  std::printf("%s  %d. %-44s %8.3f s%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs, out.ok ? "" : "  ",
              out.detail.c_str());
  return out.ok;
}

std::optional<Rational> R_at_origin(const PlanarSystem& s) {
  const CurvatureValue v = evaluate_R(scalar_curvature(s), Rational(0), Rational(0));
  if (const auto* q = std::get_if<Rational>(&v)) return *q;
  return std::nullopt;
}

}  // namespace

int main() {
  bool all = true;

  all &= run(1, "exact curvature at the origin", 4.0, [](Outcome& o) {
    const std::pair<const char*, Rational> cases[] = {
        {"s1", Rational(-1)}, {"s1a", Rational(-80) / 289}, {"s2", Rational(6) / 5}, {"center", Rational(1)}};
    for (const auto& [key, expected] : cases) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto v = R_at_origin(sys(key));
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      o.require(v && *v == expected, std::string(key) + ": wrong value");
      o.require(secs < 1.0, std::string(key) + ": slower than 1 s");
    }
  });

  all &= run(2, "cross-multiplication identities", 5.0, [](Outcome& o) {
    const auto fix = load_fixtures(std::string(CCLAB_TEST_DATA_DIR) + "/fixtures/curvature.fix");
    for (const char* key : {"s1", "s2"}) {
      const RationalFunction tr{fix.at(std::string(key) + ".R1"), fix.at(std::string(key) + ".R2")};
      o.require(rational_equal(scalar_curvature(sys(key)), tr), std::string(key) + ": N/D differs from R1/R2");
    }
    const VarNames xy{"x", "y"};
    const RationalFunction center{parse_polynomial("1", xy), parse_polynomial("(x^2 + 1)^2*(4*x^2 + (y + 1)^2)", xy)};
    o.require(rational_equal(scalar_curvature(sys("center")), center), "center: N/D differs from the closed form");
  });

  all &= run(3, "singular-locus certifications", 5.0, [](Outcome& o) {
    const VarNames uv{"u", "v"};
    const SubsystemReport S1 = real_solutions_2x2(parse_polynomial("24*u^2 + 8*u*v + v^2 - 8", uv),
                                                  parse_polynomial("4*u*v + v^2 + 4", uv));
    const SubsystemReport S2 = real_solutions_2x2(parse_polynomial("8*u^2 + 8*u*v + 3*v^2", uv),
                                                  parse_polynomial("2*u^2 + u*v - 1", uv));
    o.require(S1.status == SolutionStatus::empty_certified, "S1 not certified empty");
    o.require(S2.status == SolutionStatus::empty_certified, "S2 not certified empty");
    const SingularLocusReport s2 = singular_locus(sys("s2"));
    o.require(s2.empty_certified() && s2.points.empty(), "s2 locus not certified empty");
    const SingularLocusReport c = singular_locus(sys("center"));
    o.require(c.points.size() == 1 && c.certified_divergences() == 1, "center: not exactly one certified point");
    if (!c.points.empty()) {
      const auto& p = c.points[0].location;
      o.require(p.exact() && p.x.lo == 0 && p.y.lo == -1, "center: divergence not at (0,-1)");
    }
  });

  all &= run(4, "limit-cycle ground truth", 30.0, [](Outcome& o) {
    struct Expect {
      const char* key;
      std::vector<std::pair<double, Stability>> cycles;
    };
    const Expect rigid[] = {{"s1", {{1.0, Stability::unstable}}},
                            {"s1a", {{1.0, Stability::stable}, {2.0, Stability::unstable}}}};
    for (const auto& e : rigid) {
      const PlanarSystem s = sys(e.key);
      const RadialForm form = detect_radial_form(s);
      o.require(form.matched, std::string(e.key) + ": radial form not detected");
      if (!form.matched) continue;
      const LimitCycleReport exact = exact_radial_cycles(form);
      const LimitCycleReport num = find_cycles_numeric(s, 0.2, 3.0, 40);
      o.require(exact.cycle_count() == e.cycles.size(), std::string(e.key) + ": exact cycle count");
      o.require(num.cycle_count() == e.cycles.size(), std::string(e.key) + ": numeric cycle count");
      if (exact.cycle_count() != e.cycles.size() || num.cycle_count() != e.cycles.size()) continue;
      for (std::size_t i = 0; i < e.cycles.size(); ++i) {
        const auto& x = exact.cycles[i];
        o.require(x.radius_interval && x.radius_interval->is_point() && x.radius == e.cycles[i].first,
                  std::string(e.key) + ": exact radius");
        o.require(x.stability == e.cycles[i].second, std::string(e.key) + ": exact stability");
        o.require(std::abs(num.cycles[i].radius - e.cycles[i].first) < 1e-6, std::string(e.key) + ": numeric radius");
        o.require(num.cycles[i].stability == e.cycles[i].second, std::string(e.key) + ": numeric stability");
      }
    }
    const LimitCycleReport c = find_cycles_numeric(sys("center"), 0.2, 3.0, 40);
    o.require(c.cycle_count() == 0, "center: cycles reported");
    o.require(c.center_flag, "center: center_flag not set");
  });

  all &= run(5, "transform reproduction", 1.0, [](Outcome& o) {
    const Matrix2 m{{{Rational(1), Rational(0)}, {Rational(1), Rational(1) / 2}}};
    const PlanarSystem t = transform(sys("s1"), m, {Rational(0), Rational(0)}, {"u", "v"});
    const VarNames uv{"u", "v"};
    o.require(t.P == parse_polynomial("-2*u - v/2 + 2*u^3 + u^2*v + u*v^2/4", uv), "u' differs");
    o.require(t.Q == parse_polynomial("4*u + 2*u^2*v + u*v^2 + v^3/4", uv), "v' differs");
  });

  all &= run(6, "growth contradiction", 1.0, [](Outcome& o) {
    const BigInt two35 = BigInt(1) << 35, two34 = BigInt(1) << 34;
    o.require(contradiction_threshold().threshold == 35, "ascending scan threshold");
    o.require(contradiction_threshold_bisect() == 35, "bisection threshold");
    o.require(S(35) > 4 * (two35 - 2) * (2 * two35 - 5), "S(35) not above the claimed value");
    o.require(S(34) <= 4 * (two34 - 2) * (2 * two34 - 5), "S(34) above the claimed value");
    for (unsigned k = 2; k <= 64; ++k) {
      const BigInt p = BigInt(1) << k;
      o.require(claimed_H(p - 1) == 4 * (p - 2) * (2 * p - 5), "identity fails at k = " + std::to_string(k));
    }
  });

  all &= run(7, "rationalization validity", 10.0, [](Outcome& o) {
    std::mt19937_64 rng(20240229);
    std::uniform_int_distribution<int> grid(-128, 128);
    for (const auto& key : catalogue().keys()) {
      const PlanarSystem s = sys(key);
      const RationalFunction r = scalar_curvature(s);
      int checked = 0;
      while (checked < 100) {
        const Rational a = Rational(grid(rng)) / 64, b = Rational(grid(rng)) / 64;
        const CurvatureValue v = evaluate_R(r, a, b);
        if (!std::holds_alternative<Rational>(v)) continue;
        const double exact = std::get<Rational>(v).get_d();
        const double fd = numeric_R_check(s, a.get_d(), b.get_d());
        o.require(std::abs(fd - exact) <= 1e-5 * std::abs(exact),
                  key + ": relative error above 1e-5 at (" + to_string(a) + ", " + to_string(b) + ")");
        ++checked;
      }
    }
  });

  all &= run(8, "property suites", 60.0, [](Outcome& o) {
    for (const auto& s : props::run_all(20240229))
      o.require(s.ok(), s.name + (s.failures.empty() ? std::string(": no cases") : ": " + s.failures.front()));
  });

  all &= run(9, "composite refutation facts", 30.0, [](Outcome& o) {
    for (const char* key : {"s1", "s1a", "s2"}) {
      const PlanarSystem s = sys(key);
      const AssertionReport a = assertion_AB_report(s, origin);
      o.require(a.assertion_A != AssertionA::holds && a.assertion_A != AssertionA::fails_indeterminate,
                std::string(key) + ": assertion (A) not refuted");
      const RadialForm form = detect_radial_form(s);
      const std::size_t cycles =
          form.matched ? exact_radial_cycles(form).cycle_count() : find_cycles_numeric(s, 0.2, 3.0, 40).cycle_count();
      o.require(cycles > 0, std::string(key) + ": no cycle found");
    }
    const PlanarSystem c = sys("center");
    const AssertionReport a = assertion_AB_report(c, origin);
    o.require(a.assertion_A == AssertionA::holds, "center: assertion (A) does not hold");
    o.require(a.assertion_B_count == 1, "center: B count is not 1");
    o.require(find_cycles_numeric(c, 0.2, 3.0, 40).cycle_count() == 0, "center: cycles reported");
  });

  return all ? 0 : 1;
}
