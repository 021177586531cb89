#include "cclab/poly2.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cclab/errors.hpp"
#include "cclab/unipoly.hpp"

namespace cclab {

Poly2::Poly2(VarNames vars) : vars_(std::move(vars)) {}

Poly2::Poly2(VarNames vars, const Rational& constant) : vars_(std::move(vars)) {
  if (sgn(constant) != 0) terms_.emplace(Exponents{0, 0}, constant);
}

Poly2 Poly2::variable(const VarNames& vars, int index) {
  return monomial(vars, index == 0 ? Exponents{1, 0} : Exponents{0, 1}, Rational(1));
}

Poly2 Poly2::monomial(const VarNames& vars, Exponents e, const Rational& c) {
  Poly2 p(vars);
  p.add_term(e, c);
  return p;
}

Poly2 Poly2::from_unipoly(const VarNames& vars, int index, const UniPoly& u) {
  Poly2 p(vars);
  for (std::size_t k = 0; k < u.coeffs().size(); ++k) {
    const auto e = static_cast<unsigned>(k);
    p.add_term(index == 0 ? Exponents{e, 0} : Exponents{0, e}, u.coeffs()[k]);
  }
  return p;
}

bool Poly2::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0});
}

int Poly2::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return static_cast<int>(e.i + e.j);
}

int Poly2::degree_in(int index) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(index == 0 ? e.i : e.j));
  return d;
}

int Poly2::var_index(const std::string& name) const {
  if (name == vars_[0]) return 0;
  if (name == vars_[1]) return 1;
  throw InputError("exact_algebra", "unknown variable '" + name + "'");
}

Rational Poly2::coefficient(Exponents e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly2::add_term(Exponents e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

void Poly2::require_same_vars(const Poly2& other, const char* op) const {
  if (vars_ != other.vars_)
    throw InputError("exact_algebra", std::string("variable-name mismatch in ") + op + ": (" + vars_[0] + "," +
                                          vars_[1] + ") vs (" + other.vars_[0] + "," + other.vars_[1] + ")");
}

Poly2& Poly2::operator+=(const Poly2& rhs) {
  require_same_vars(rhs, "add");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& rhs) {
  require_same_vars(rhs, "sub");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Poly2& Poly2::operator*=(const Poly2& rhs) { return *this = *this * rhs; }

Poly2& Poly2::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  a.require_same_vars(b, "mul");
  Poly2 out(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term({ea.i + eb.i, ea.j + eb.j}, ca * cb);
  return out;
}

Poly2 Poly2::operator-() const {
  Poly2 r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

bool operator==(const Poly2& a, const Poly2& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

Poly2 Poly2::renamed(const VarNames& vars) const {
  Poly2 r = *this;
  r.vars_ = vars;
  return r;
}

std::vector<UniPoly> Poly2::coefficients_in(int index) const {
  const int d = degree_in(index);
  const std::string& other = vars_[index == 0 ? 1 : 0];
  std::vector<std::vector<Rational>> dense(static_cast<std::size_t>(std::max(d, 0) + (d >= 0 ? 1 : 0)));
  for (const auto& [e, c] : terms_) {
    const unsigned main = index == 0 ? e.i : e.j;
    const unsigned rest = index == 0 ? e.j : e.i;
    auto& slot = dense[main];
    if (slot.size() <= rest) slot.resize(rest + 1);
    slot[rest] += c;
  }
  std::vector<UniPoly> out;
  out.reserve(dense.size());
  for (auto& v : dense) out.emplace_back(std::move(v), other);
  return out;
}

Poly2 poly_arith(const Poly2& p, const Poly2& q, PolyOp op) {
  switch (op) {
    case PolyOp::add:
      return p + q;
    case PolyOp::sub:
      return p - q;
    case PolyOp::mul:
      return p * q;
  }
  throw InputError("exact_algebra", "unknown polynomial operation");
}

Poly2 pow(const Poly2& p, unsigned exponent) {
  Poly2 result(p.vars(), Rational(1));
  Poly2 base = p;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Poly2 partial_derivative(const Poly2& p, int index) {
  Poly2 d(p.vars());
  for (const auto& [e, c] : p.terms()) {
    const unsigned k = index == 0 ? e.i : e.j;
    if (k == 0) continue;
    Exponents lowered = index == 0 ? Exponents{e.i - 1, e.j} : Exponents{e.i, e.j - 1};
    d.add_term(lowered, c * k);
  }
  return d;
}

Poly2 partial_derivative(const Poly2& p, const std::string& var) { return partial_derivative(p, p.var_index(var)); }

Rational evaluate(const Poly2& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) return 0;
  const unsigned di = static_cast<unsigned>(p.degree_in(0));
  const unsigned dj = static_cast<unsigned>(p.degree_in(1));
  std::vector<Rational> pa(di + 1, Rational(1));
  std::vector<Rational> pb(dj + 1, Rational(1));
  for (unsigned k = 1; k <= di; ++k) pa[k] = pa[k - 1] * a;
  for (unsigned k = 1; k <= dj; ++k) pb[k] = pb[k - 1] * b;
  Rational acc = 0;
  for (const auto& [e, c] : p.terms()) acc += c * pa[e.i] * pb[e.j];
  return acc;
}

UniPoly specialize(const Poly2& p, int index, const Rational& value) {
  const int other = index == 0 ? 1 : 0;
  const std::vector<UniPoly> coeffs = p.coefficients_in(other);
  std::vector<Rational> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(c(value));
  return UniPoly(std::move(out), p.vars()[other]);
}

double evaluate(const Poly2& p, double a, double b) { return CompiledPoly2(p)(a, b); }

Poly2 substitute_linear(const Poly2& p, const Matrix2& m, const Vector2& offset, const VarNames& new_vars) {
  const Poly2 u = Poly2::variable(new_vars, 0);
  const Poly2 v = Poly2::variable(new_vars, 1);
  const Poly2 first = m[0][0] * u + m[0][1] * v + Poly2(new_vars, offset[0]);
  const Poly2 second = m[1][0] * u + m[1][1] * v + Poly2(new_vars, offset[1]);
  if (p.is_zero()) return Poly2(new_vars);
  std::vector<Poly2> pf(static_cast<std::size_t>(p.degree_in(0)) + 1, Poly2(new_vars, Rational(1)));
  std::vector<Poly2> ps(static_cast<std::size_t>(p.degree_in(1)) + 1, Poly2(new_vars, Rational(1)));
  for (std::size_t k = 1; k < pf.size(); ++k) pf[k] = pf[k - 1] * first;
  for (std::size_t k = 1; k < ps.size(); ++k) ps[k] = ps[k - 1] * second;
  Poly2 out(new_vars);
  for (const auto& [e, c] : p.terms()) out += c * (pf[e.i] * ps[e.j]);
  return out;
}

namespace {

void append_power(std::ostringstream& out, const std::string& var, unsigned k, bool& need_star) {
  if (k == 0) return;
  if (need_star) out << "*";
  out << var;
  if (k > 1) out << "^" << k;
  need_star = true;
}

}  // namespace

std::string to_string(const Poly2& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, coef] : p.terms()) {
    if (first) {
      if (sgn(coef) < 0) out << "-";
    } else {
      out << (sgn(coef) < 0 ? " - " : " + ");
    }
    first = false;
    const Rational c = abs(coef);
    bool need_star = false;
    if (c != 1 || (e.i == 0 && e.j == 0)) {
      out << c.get_str();
      need_star = true;
    }
    append_power(out, p.vars()[0], e.i, need_star);
    append_power(out, p.vars()[1], e.j, need_star);
  }
  return out.str();
}

CompiledPoly2::CompiledPoly2(const Poly2& p) {
  for (const auto& [e, c] : p.terms()) {
    terms_.push_back({e.i, e.j, c.get_d()});
    max_i_ = std::max(max_i_, e.i);
    max_j_ = std::max(max_j_, e.j);
  }
}

double CompiledPoly2::operator()(double a, double b) const {
  // Small fixed-size power tables; degrees here stay well below 64.
  double pa[64];
  double pb[64];
  const unsigned ni = std::min(max_i_, 63U);
  const unsigned nj = std::min(max_j_, 63U);
  pa[0] = 1.0;
  pb[0] = 1.0;
  for (unsigned k = 1; k <= ni; ++k) pa[k] = pa[k - 1] * a;
  for (unsigned k = 1; k <= nj; ++k) pb[k] = pb[k - 1] * b;
  double acc = 0.0;
  for (const auto& t : terms_) {
    const double xa = t.i <= ni ? pa[t.i] : std::pow(a, t.i);
    const double yb = t.j <= nj ? pb[t.j] : std::pow(b, t.j);
    acc += t.c * xa * yb;
  }
  return acc;
}

}  // namespace cclab
