#pragma once

#include <array>
#include <string>
#include <variant>

#include "cclab/poly2.hpp"
#include "cclab/system.hpp"

namespace cclab {

// (A^2 + B^2)^multiplicity. Its real zeros are the common real zeros of A, B.
struct SOSFactor {
  Poly2 A;
  Poly2 B;
  unsigned multiplicity = 1;
};

struct MetricComponents {
  Poly2 G11;  // 2 (P_x^2 + Q_x^2)
  Poly2 G22;  // 2 (P_y^2 + Q_y^2)
  Poly2 G;    // G11 * G22
  SOSFactor x_block;  // A = P_x, B = Q_x
  SOSFactor y_block;  // A = P_y, B = Q_y
};

MetricComponents metric_components(const PlanarSystem& sys);

// Unreduced quotient; the denominator is never identically zero.
struct RationalFunction {
  Poly2 numerator;
  Poly2 denominator;
};

/// Curvature of the diagonal metric diag(G11, G22):
///
///   R = G^{-1/2} [ d/dx (G^{-1/2} dG22/dx) + d/dy (G^{-1/2} dG11/dy) ]
///
/// Expanding the square roots gives R = N / (2 G^2) with
///   N = 2 G (G22_xx + G11_yy) - (G_x G22_x + G_y G11_y),
/// which is what is returned (no cancellation is attempted).
/// Throws DegenerateMetricError when G vanishes identically.
RationalFunction scalar_curvature(const PlanarSystem& sys);
RationalFunction scalar_curvature(const MetricComponents& metric);

struct SingularDenominator {};
struct Indeterminate {};
using CurvatureValue = std::variant<Rational, SingularDenominator, Indeterminate>;

CurvatureValue evaluate_R(const RationalFunction& r, const Rational& a, const Rational& b);
std::string to_string(const CurvatureValue& v);

/// a.num * b.den == b.num * a.den.
bool rational_equal(const RationalFunction& a, const RationalFunction& b);

struct NumericCheckOptions {
  double step = 1e-5;
};

/// Floating evaluation of the square-root form with the two outer derivatives
/// taken by central differences. Throws DomainError when G <= 0 at the point.
double numeric_R_check(const PlanarSystem& sys, double a, double b, const NumericCheckOptions& opts = {});

}  // namespace cclab
