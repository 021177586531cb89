#include "cclab/rational.hpp"

#include <cctype>

#include "cclab/errors.hpp"

namespace cclab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw InputError("rational", "malformed rational literal '" + std::string(text) + "'");
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) throw InputError("rational", "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const BigInt& z) { return z.get_str(10); }

Rational pow(const Rational& base, unsigned exponent) {
  BigInt n;
  BigInt d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), exponent);
  return Rational(n, d);  // already reduced
}

SqrtBounds sqrt_bounds(const Rational& q, const BigInt& scale) {
  if (sgn(q) < 0) throw InputError("rational", "sqrt of a negative rational");
  // sqrt(n/d) = sqrt(n*d)/d
  const BigInt& n = q.get_num();
  const BigInt& d = q.get_den();
  BigInt radicand = n * d * scale * scale;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  const BigInt denom = d * scale;
  Rational lo(root, denom);
  lo.canonicalize();
  if (root * root == radicand) return {lo, lo};
  Rational hi(BigInt(root + 1), denom);
  hi.canonicalize();
  return {lo, hi};
}

BigInt floor(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

BigInt ceil(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational simplest_between(const Rational& a, const Rational& b) {
  if (b < a) throw InputError("rational", "simplest_between needs a <= b");
  if (sgn(a) <= 0 && sgn(b) >= 0) return Rational(0);
  if (sgn(b) < 0) return -simplest_between(-b, -a);
  const BigInt c = ceil(a);
  if (c <= b) return Rational(c);
  // Both ends lie strictly between consecutive integers: recurse on the continued fraction tail.
  const BigInt f = floor(a);
  const Rational tail = simplest_between(Rational(1) / Rational(b - f), Rational(1) / Rational(a - f));
  return Rational(f) + Rational(1) / tail;
}

}  // namespace cclab
