#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "cclab/dynamics.hpp"
#include "cclab/errors.hpp"
#include "helpers.hpp"

using namespace cclab;

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

UniPoly us(std::vector<Rational> c) { return UniPoly(std::move(c), "s"); }

double radius(const std::array<double, 3>& s) { return std::hypot(s[1], s[2]); }

RadialForm radial(std::vector<Rational> f) {
  RadialForm form;
  form.f = us(std::move(f));
  form.matched = true;
  return form;
}

}  // namespace

TEST_CASE("radial form detection") {
  const RadialForm s1 = detect_radial_form(testing::system("s1"));
  REQUIRE(s1.matched);
  CHECK(s1.f == us({Rational(-1), Rational(1)}));

  const RadialForm s1a = detect_radial_form(testing::system("s1a"));
  REQUIRE(s1a.matched);
  CHECK(s1a.f == us({Rational(4), Rational(-5), Rational(1)}));

  CHECK_FALSE(detect_radial_form(testing::system("center")).matched);
  CHECK_FALSE(detect_radial_form(testing::system("s2")).matched);

  const RadialForm rotation = detect_radial_form(testing::make_system("-y", "x"));
  CHECK(rotation.matched);
  CHECK(rotation.f.is_zero());
}

TEST_CASE("exact radial cycles") {
  const LimitCycleReport one = exact_radial_cycles(radial({Rational(-1), Rational(1)}));
  REQUIRE(one.cycle_count() == 1);
  CHECK(one.cycles[0].radius == 1.0);
  CHECK(one.cycles[0].stability == Stability::unstable);
  CHECK(one.cycles[0].period == doctest::Approx(two_pi).epsilon(1e-12));
  CHECK(one.cycles[0].s_interval->is_point());
  CHECK(one.cycles[0].radius_interval->lo == 1);
  CHECK(one.cycles[0].radius_interval->hi == 1);

  const LimitCycleReport two = exact_radial_cycles(radial({Rational(4), Rational(-5), Rational(1)}));
  REQUIRE(two.cycle_count() == 2);
  CHECK(two.cycles[0].radius == 1.0);
  CHECK(two.cycles[0].stability == Stability::stable);
  CHECK(two.cycles[1].radius == 2.0);
  CHECK(two.cycles[1].stability == Stability::unstable);

  CHECK(exact_radial_cycles(radial({Rational(1), Rational(1)})).cycle_count() == 0);

  const LimitCycleReport centre = exact_radial_cycles(radial({}));
  CHECK(centre.center_flag);
  CHECK(centre.cycle_count() == 0);

  // (s - 1)^2: a double root gives a semi-stable cycle.
  const LimitCycleReport semi = exact_radial_cycles(radial({Rational(1), Rational(-2), Rational(1)}));
  REQUIRE(semi.cycle_count() == 1);
  CHECK(semi.cycles[0].stability == Stability::semi_stable);
  CHECK_FALSE(semi.cycles[0].note.empty());

  // s^2 - 2: the radius is the fourth root of 2 and stays enclosed.
  const LimitCycleReport irr = exact_radial_cycles(radial({Rational(-2), Rational(0), Rational(1)}));
  REQUIRE(irr.cycle_count() == 1);
  CHECK(irr.cycles[0].radius == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-12));
  CHECK(irr.cycles[0].radius_interval->lo.get_d() <= std::pow(2.0, 0.25));
  CHECK(irr.cycles[0].radius_interval->hi.get_d() >= std::pow(2.0, 0.25) - 1e-15);

  RadialForm unmatched;
  CHECK_THROWS_AS(exact_radial_cycles(unmatched), InputError);
}

TEST_CASE("adaptive integration") {
  const Trajectory rot = integrate(testing::make_system("-y", "x"), {1.0, 0.0}, two_pi);
  const auto& end = rot.samples.back();
  CHECK(end[0] == doctest::Approx(two_pi).epsilon(1e-15));
  CHECK(std::abs(end[1] - 1.0) < 1e-8);
  CHECK(std::abs(end[2]) < 1e-8);
  for (std::size_t i = 1; i < rot.samples.size(); ++i) CHECK(rot.samples[i][0] > rot.samples[i - 1][0]);

  const PlanarSystem s1 = testing::system("s1");
  const Trajectory in = integrate(s1, {0.5, 0.0}, 3.0);
  CHECK(radius(in.samples.back()) < 0.5);
  for (std::size_t i = 1; i < in.samples.size(); ++i) CHECK(radius(in.samples[i]) < radius(in.samples[i - 1]));

  const Trajectory out = integrate(s1, {1.2, 0.0}, 0.5);
  CHECK(radius(out.samples.back()) > 1.2);

  CHECK_THROWS_AS(integrate(s1, {0.5, 0.0}, 0.0), InputError);
  // r' = r (r^2 - 1) blows up in finite time from r = 1.2.
  CHECK_THROWS_AS(integrate(s1, {1.2, 0.0}, 10.0), IntegrationError);
}

TEST_CASE("adaptive integration matches the closed-form radial solution") {
  // r(t)^2 = 1 / (1 + 3 e^{2t}) from r0 = 1/2, and the angle equals t.
  const Trajectory tr = integrate(testing::system("s1"), {0.5, 0.0}, 5.0);
  double worst = 0.0;
  for (const auto& s : tr.samples) {
    const double r = 1.0 / std::sqrt(1.0 + 3.0 * std::exp(2.0 * s[0]));
    worst = std::max(worst, std::hypot(s[1] - r * std::cos(s[0]), s[2] - r * std::sin(s[0])));
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("Poincare return map") {
  const PlanarSystem s1 = testing::system("s1");
  CHECK(std::abs(poincare_return(s1, 1.0) - 1.0) < 1e-8);
  CHECK(std::abs(poincare_return(testing::make_system("-y", "x"), 0.7) - 0.7) < 1e-8);
  CHECK(poincare_return(s1, 0.9) < 0.9);
  CHECK(poincare_return(s1, 0.5) < 0.5);

  const ReturnResult full = poincare_return_full(testing::make_system("-y", "x"), 0.7);
  CHECK(std::abs(full.time - two_pi) < 1e-8);

  // Clockwise rotation: the section is crossed in the opposite sense.
  CHECK(std::abs(poincare_return(testing::make_system("y", "-x"), 0.7) - 0.7) < 1e-8);

  CHECK_THROWS_AS(poincare_return(s1, -1.0), InputError);
  CHECK_THROWS_AS(poincare_return(testing::make_system("-y + 1", "x"), 0.5), InputError);
  CHECK_THROWS_AS(poincare_return(s1, 1.5), IntegrationError);
}

TEST_CASE("numeric cycle scan on rigid systems agrees with the exact analysis") {
  for (const char* key : {"s1", "s1a"}) {
    CAPTURE(key);
    const PlanarSystem sys = testing::system(key);
    const LimitCycleReport exact = exact_radial_cycles(detect_radial_form(sys));
    const LimitCycleReport numeric = find_cycles_numeric(sys, 0.2, 3.0, 40);
    REQUIRE(numeric.cycle_count() == exact.cycle_count());
    CHECK_FALSE(numeric.center_flag);
    for (std::size_t i = 0; i < exact.cycles.size(); ++i) {
      CHECK(std::abs(numeric.cycles[i].radius - exact.cycles[i].radius) < 1e-6);
      CHECK(numeric.cycles[i].stability == exact.cycles[i].stability);
      CHECK(std::abs(numeric.cycles[i].period - two_pi) < 1e-6);
      CHECK(numeric.cycles[i].source == CycleSource::numeric_poincare);
    }
  }
}

TEST_CASE("scan direction does not change the cycle set") {
  for (const char* key : {"s1", "s1a", "center"}) {
    CAPTURE(key);
    const PlanarSystem sys = testing::system(key);
    ScanOptions down;
    down.descending = true;
    const LimitCycleReport a = find_cycles_numeric(sys, 0.2, 3.0, 40);
    const LimitCycleReport b = find_cycles_numeric(sys, 0.2, 3.0, 40, down);
    REQUIRE(a.cycle_count() == b.cycle_count());
    CHECK(a.center_flag == b.center_flag);
    for (std::size_t i = 0; i < a.cycles.size(); ++i) {
      CHECK(std::abs(a.cycles[i].radius - b.cycles[i].radius) < 1e-9);
      CHECK(a.cycles[i].stability == b.cycles[i].stability);
    }
  }
}

TEST_CASE("the quadratic center has no cycles in the scanned annulus") {
  const LimitCycleReport c = find_cycles_numeric(testing::system("center"), 0.2, 3.0, 40);
  CHECK(c.cycle_count() == 0);
  CHECK(c.center_flag);
  REQUIRE(c.annulus.has_value());
  CHECK((*c.annulus)[0] == 0.2);
  CHECK((*c.annulus)[1] == 3.0);
}

TEST_CASE("a linearly transformed cycle is found at the image radius") {
  // s2 is s1 under x = u, y = u + v/2; the unit circle meets the positive u-axis at u = 1/sqrt 2.
  const LimitCycleReport s2 = find_cycles_numeric(testing::system("s2"), 0.2, 3.0, 40);
  REQUIRE(s2.cycle_count() == 1);
  CHECK(std::abs(s2.cycles[0].radius - std::sqrt(0.5)) < 1e-6);
  CHECK(s2.cycles[0].stability == Stability::unstable);
  CHECK(std::abs(s2.cycles[0].period - two_pi) < 1e-6);
}

TEST_CASE("scan arguments are validated") {
  const PlanarSystem s1 = testing::system("s1");
  CHECK_THROWS_AS(find_cycles_numeric(s1, 0.2, 3.0, 1), InputError);
  CHECK_THROWS_AS(find_cycles_numeric(s1, 0.0, 3.0, 10), InputError);
  CHECK_THROWS_AS(find_cycles_numeric(s1, 2.0, 1.0, 10), InputError);
}

TEST_CASE("translation to the origin") {
  const PlanarSystem t = translate_to_origin(testing::make_system("y - 2", "x + 1 - y + 2"), Rational(-1), Rational(2));
  CHECK(evaluate(t.P, Rational(0), Rational(0)) == 0);
  CHECK(evaluate(t.Q, Rational(0), Rational(0)) == 0);
}

TEST_CASE("trajectory CSV") {
  const Trajectory tr = integrate(testing::make_system("-y", "x"), {1.0, 0.0}, 0.5);
  std::ostringstream out;
  write_trajectory_csv(out, tr, {{"system", "rotation"}});
  std::istringstream in(out.str());
  std::string line;
  std::size_t comments = 0, rows = 0;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) {
      CHECK_FALSE(header);
      ++comments;
    } else if (line == "t,x,y") {
      header = true;
    } else {
      REQUIRE(header);
      double t, x, y;
      char c1, c2;
      std::istringstream row(line);
      REQUIRE(static_cast<bool>(row >> t >> c1 >> x >> c2 >> y));
      CHECK(c1 == ',');
      CHECK(c2 == ',');
      CHECK(t == tr.samples[rows][0]);
      CHECK(x == tr.samples[rows][1]);
      CHECK(y == tr.samples[rows][2]);
      ++rows;
    }
  }
  CHECK(header);
  CHECK(comments >= 5);
  CHECK(out.str().find("# system: rotation") != std::string::npos);
  CHECK(rows == tr.samples.size());
}
