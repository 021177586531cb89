#include "cclab/unipoly.hpp"

#include <sstream>

#include "cclab/errors.hpp"

namespace cclab {

UniPoly::UniPoly(std::vector<Rational> coeffs, std::string var)
    : coeffs_(std::move(coeffs)), var_(std::move(var)) {
  trim();
}

UniPoly::UniPoly(const Rational& constant, std::string var) : var_(std::move(var)) {
  if (sgn(constant) != 0) coeffs_.push_back(constant);
}

UniPoly UniPoly::monomial(unsigned power, const Rational& c, std::string var) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return UniPoly(std::move(v), std::move(var));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UniPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational UniPoly::operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly::zero(a.var_);
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out), a.var_);
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Rational UniPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double UniPoly::operator()(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw InputError("exact_algebra", "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {UniPoly::zero(a.var()), a};
  std::vector<Rational> quot(static_cast<std::size_t>(da - db + 1));
  const Rational lead = b.leading();
  for (int k = da; k >= db; --k) {
    const Rational& top = rem[static_cast<std::size_t>(k)];
    if (sgn(top) == 0) continue;
    Rational factor = top / lead;
    quot[static_cast<std::size_t>(k - db)] = factor;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= factor * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(quot), a.var()), UniPoly(std::move(rem), a.var())};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalError("exact_algebra", "inexact polynomial division");
  return q;
}

UniPoly derivative(const UniPoly& p) {
  if (p.degree() < 1) return UniPoly::zero(p.var());
  std::vector<Rational> d(p.coeffs().size() - 1);
  for (std::size_t k = 1; k < p.coeffs().size(); ++k) d[k - 1] = p.coeffs()[k] * static_cast<unsigned long>(k);
  return UniPoly(std::move(d), p.var());
}

UniPoly monic(const UniPoly& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading());
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = monic(r);
  }
  return monic(x);
}

UniPoly square_free_part(const UniPoly& p) {
  if (p.degree() < 1) return monic(p);
  return monic(exact_div(p, gcd(p, derivative(p))));
}

UniPoly pow(const UniPoly& p, unsigned exponent) {
  UniPoly result(Rational(1), p.var());
  UniPoly base = p;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string to_string(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeffs()[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    c = abs(c);
    const bool unit = c == 1;
    if (k == 0) {
      out << c.get_str();
    } else {
      if (!unit) out << c.get_str() << "*";
      out << p.var();
      if (k > 1) out << "^" << k;
    }
    first = false;
  }
  return out.str();
}

}  // namespace cclab
