#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cclab/rational.hpp"

namespace cclab {

/// Dense univariate polynomial over the rationals, lowest degree first.
/// The leading coefficient is nonzero unless the polynomial is zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs, std::string var = "x");
  explicit UniPoly(const Rational& constant, std::string var = "x");

  static UniPoly zero(std::string var = "x") { return UniPoly(std::vector<Rational>{}, std::move(var)); }

  static UniPoly monomial(unsigned power, const Rational& c, std::string var = "x");

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const std::string& var() const { return var_; }
  void set_var(std::string var) { var_ = std::move(var); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Rational leading() const;
  Rational operator[](std::size_t k) const;

  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const Rational& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  UniPoly operator-() const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  Rational operator()(const Rational& t) const;
  double operator()(double t) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
  std::string var_ = "x";
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

DivMod divmod(const UniPoly& a, const UniPoly& b);
/// Division known to be exact; throws InternalError on a nonzero remainder.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
UniPoly derivative(const UniPoly& p);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// p / gcd(p, p'), made monic.
UniPoly square_free_part(const UniPoly& p);
UniPoly pow(const UniPoly& p, unsigned exponent);
/// Divides by the leading coefficient.
UniPoly monic(const UniPoly& p);

std::string to_string(const UniPoly& p);

}  // namespace cclab
