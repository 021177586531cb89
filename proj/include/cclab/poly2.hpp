#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cclab/rational.hpp"

namespace cclab {

class UniPoly;

using VarNames = std::array<std::string, 2>;

// Exponent pair (power of the first variable, power of the second).
struct Exponents {
  unsigned i = 0;
  unsigned j = 0;
  friend bool operator==(const Exponents&, const Exponents&) = default;
};

// Canonical term order: total degree descending, then first exponent
// descending. Iterating a Poly2 visits terms in printing order.
struct CanonicalOrder {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const unsigned da = a.i + a.j;
    const unsigned db = b.i + b.j;
    if (da != db) return da > db;
    return a.i > b.i;
  }
};

// 2x2 rational matrix, row major.
using Matrix2 = std::array<std::array<Rational, 2>, 2>;
using Vector2 = std::array<Rational, 2>;

/// Sparse bivariate polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored, so two Poly2 values with the same
/// variable names compare equal iff they are the same polynomial.
class Poly2 {
 public:
  using TermMap = std::map<Exponents, Rational, CanonicalOrder>;

  explicit Poly2(VarNames vars = {"x", "y"});
  Poly2(VarNames vars, const Rational& constant);

  static Poly2 variable(const VarNames& vars, int index);
  static Poly2 monomial(const VarNames& vars, Exponents e, const Rational& c);
  /// Embeds a univariate polynomial as a polynomial in variable `index`.
  static Poly2 from_unipoly(const VarNames& vars, int index, const UniPoly& p);

  const VarNames& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  /// Degree in variable `index`; -1 for the zero polynomial.
  int degree_in(int index) const;
  /// Index of `name` among the variables, or throws InputError.
  int var_index(const std::string& name) const;

  Rational coefficient(Exponents e) const;
  void add_term(Exponents e, const Rational& c);

  Poly2& operator+=(const Poly2& rhs);
  Poly2& operator-=(const Poly2& rhs);
  Poly2& operator*=(const Poly2& rhs);
  Poly2& operator*=(const Rational& c);

  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(Poly2 a, const Rational& c) { return a *= c; }
  friend Poly2 operator*(const Rational& c, Poly2 a) { return a *= c; }
  Poly2 operator-() const;

  friend bool operator==(const Poly2& a, const Poly2& b);

  /// Same polynomial with the variables renamed (no reordering).
  Poly2 renamed(const VarNames& vars) const;

  /// Coefficients as a polynomial in variable `index`, lowest power first;
  /// each coefficient is a univariate polynomial in the other variable.
  std::vector<UniPoly> coefficients_in(int index) const;

 private:
  void require_same_vars(const Poly2& other, const char* op) const;

  VarNames vars_;
  TermMap terms_;
};

enum class PolyOp { add, sub, mul };

Poly2 poly_arith(const Poly2& p, const Poly2& q, PolyOp op);
Poly2 pow(const Poly2& p, unsigned exponent);

Poly2 partial_derivative(const Poly2& p, int index);
Poly2 partial_derivative(const Poly2& p, const std::string& var);

Rational evaluate(const Poly2& p, const Rational& a, const Rational& b);
double evaluate(const Poly2& p, double a, double b);

/// Fixes variable `index` to `value`; the result is univariate in the other.
UniPoly specialize(const Poly2& p, int index, const Rational& value);

/// Exact composition p(M*(u,v) + offset), expressed in `new_vars`.
Poly2 substitute_linear(const Poly2& p, const Matrix2& m, const Vector2& offset,
                        const VarNames& new_vars);

/// Canonical text: terms by total degree descending then lexicographically,
/// explicit `*`, re-parseable by the expression parser.
std::string to_string(const Poly2& p);

/// Double-precision evaluator with precomputed monomial table.
class CompiledPoly2 {
 public:
  CompiledPoly2() = default;
  explicit CompiledPoly2(const Poly2& p);
  double operator()(double a, double b) const;

 private:
  struct Term {
    unsigned i;
    unsigned j;
    double c;
  };
  std::vector<Term> terms_;
  unsigned max_i_ = 0;
  unsigned max_j_ = 0;
};

}  // namespace cclab
