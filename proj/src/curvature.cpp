#include "cclab/curvature.hpp"

#include <cmath>

namespace cclab {

MetricComponents metric_components(const PlanarSystem& sys) {
  const Poly2 px = partial_derivative(sys.P, 0);
  const Poly2 qx = partial_derivative(sys.Q, 0);
  const Poly2 py = partial_derivative(sys.P, 1);
  const Poly2 qy = partial_derivative(sys.Q, 1);
  Poly2 g11 = Rational(2) * (px * px + qx * qx);
  Poly2 g22 = Rational(2) * (py * py + qy * qy);
  Poly2 g = g11 * g22;
  return {std::move(g11), std::move(g22), std::move(g), {px, qx, 1}, {py, qy, 1}};
}

RationalFunction scalar_curvature(const MetricComponents& m) {
  if (m.G.is_zero()) throw DegenerateMetricError("metric determinant G vanishes identically");
  const Poly2 g22_x = partial_derivative(m.G22, 0);
  const Poly2 g11_y = partial_derivative(m.G11, 1);
  const Poly2 g_x = partial_derivative(m.G, 0);
  const Poly2 g_y = partial_derivative(m.G, 1);
  const Poly2 second = partial_derivative(g22_x, 0) + partial_derivative(g11_y, 1);
  Poly2 numerator = Rational(2) * (m.G * second) - (g_x * g22_x + g_y * g11_y);
  Poly2 denominator = Rational(2) * (m.G * m.G);
  return {std::move(numerator), std::move(denominator)};
}

RationalFunction scalar_curvature(const PlanarSystem& sys) { return scalar_curvature(metric_components(sys)); }

CurvatureValue evaluate_R(const RationalFunction& r, const Rational& a, const Rational& b) {
  const Rational d = evaluate(r.denominator, a, b);
  const Rational n = evaluate(r.numerator, a, b);
  if (sgn(d) != 0) return Rational(n / d);
  if (sgn(n) != 0) return SingularDenominator{};
  return Indeterminate{};
}

std::string to_string(const CurvatureValue& v) {
  if (const auto* q = std::get_if<Rational>(&v)) return to_string(*q);
  if (std::holds_alternative<SingularDenominator>(v)) return "singular";
  return "indeterminate";
}

bool rational_equal(const RationalFunction& a, const RationalFunction& b) {
  return a.numerator * b.denominator == b.numerator * a.denominator;
}

double numeric_R_check(const PlanarSystem& sys, double a, double b, const NumericCheckOptions& opts) {
  const MetricComponents m = metric_components(sys);
  const CompiledPoly2 g(m.G);
  const CompiledPoly2 g22_x(partial_derivative(m.G22, 0));
  const CompiledPoly2 g11_y(partial_derivative(m.G11, 1));
  auto inner_x = [&](double s, double t) {
    const double gv = g(s, t);
    if (!(gv > 0.0)) throw DomainError("G <= 0 near the evaluation point");
    return g22_x(s, t) / std::sqrt(gv);
  };
  auto inner_y = [&](double s, double t) {
    const double gv = g(s, t);
    if (!(gv > 0.0)) throw DomainError("G <= 0 near the evaluation point");
    return g11_y(s, t) / std::sqrt(gv);
  };
  const double g0 = g(a, b);
  if (!(g0 > 0.0)) throw DomainError("G <= 0 at the evaluation point");
  const double h = opts.step;
  const double dx = (inner_x(a + h, b) - inner_x(a - h, b)) / (2.0 * h);
  const double dy = (inner_y(a, b + h) - inner_y(a, b - h)) / (2.0 * h);
  return (dx + dy) / std::sqrt(g0);
}

}  // namespace cclab
