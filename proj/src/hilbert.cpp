#include "cclab/hilbert.hpp"

#include <mpfr.h>

#include <cmath>
#include <cstdlib>
#include <optional>

#include "cclab/errors.hpp"

namespace cclab {

BigInt claimed_H(const BigInt& n) {
  if (n < 2) throw InputError("hilbert_bounds", "claimed formula is stated for n >= 2");
  const BigInt m = n - 1;
  return BigInt(2 * m * (4 * m - 2));
}

BigInt claimed_H_at_power(unsigned k) {
  const BigInt p = BigInt(1) << k;
  return BigInt(4 * (p - 2) * (2 * p - 5));
}

BigInt S(unsigned k) {
  if (k < 2) throw InputError("hilbert_bounds", "S_k is defined for k >= 2");
  const BigInt four_pow = BigInt(1) << (2 * (k - 1));
  const Rational value = Rational(four_pow) * (Rational(k) - Rational(13, 6)) + Rational(BigInt(1) << k) - Rational(1, 3);
  if (value.get_den() != 1) throw InternalError("hilbert_bounds", "S_k is not an integer for k = " + std::to_string(k));
  return value.get_num();
}

GrowthComparison compare_growth(unsigned k) {
  GrowthComparison g;
  g.k = k;
  g.degree = (BigInt(1) << k) - 1;
  g.S_k = S(k);
  g.claimed = claimed_H(g.degree);
  g.contradiction = g.S_k > g.claimed;
  return g;
}

std::vector<GrowthComparison> comparison_table(unsigned k_max) {
  std::vector<GrowthComparison> rows;
  for (unsigned k = 2; k <= k_max; ++k) rows.push_back(compare_growth(k));
  return rows;
}

namespace {

constexpr unsigned kScanLimit = 4096;

bool contradicts(unsigned k) { return compare_growth(k).contradiction; }

}  // namespace

ThresholdResult contradiction_threshold() {
  ThresholdResult r;
  for (unsigned k = 2; k <= kScanLimit; ++k) {
    if (contradicts(k)) {
      r.threshold = k;
      break;
    }
  }
  if (r.threshold == 0) throw InternalError("hilbert_bounds", "no contradiction found in scan range");
  for (unsigned k = r.threshold; k <= 2 * r.threshold; ++k)
    if (!contradicts(k)) throw InternalError("hilbert_bounds", "contradiction not persistent at k = " + std::to_string(k));
  r.verified_up_to = 2 * r.threshold;
  return r;
}

unsigned contradiction_threshold_bisect() {
  unsigned lo = 2;  // S(2) = 3 <= claimed
  if (contradicts(lo)) return lo;
  unsigned hi = 4;
  while (!contradicts(hi)) {
    lo = hi;
    hi *= 2;
    if (hi > kScanLimit) throw InternalError("hilbert_bounds", "no contradiction found in scan range");
  }
  while (hi - lo > 1) {
    const unsigned mid = lo + (hi - lo) / 2;
    if (contradicts(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

unsigned default_precision_bits() {
  if (const char* env = std::getenv("CCLAB_PRECISION_BITS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 16 && v <= 1 << 20) return static_cast<unsigned>(v);
  }
  return 80;
}

namespace {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  std::string str() const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.20Rg", v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }

 private:
  mpfr_t v_;
};

struct Comparator {
  mpfr_prec_t prec;
  Rational a, b, c;

  // bound(n) and q(n) at the configured precision.
  void values(const BigInt& n, Mpfr& bound, Mpfr& q) const {
    Mpfr m(prec);
    mpfr_set_z(m.get(), BigInt(n + 2).get_mpz_t(), MPFR_RNDN);
    Mpfr log_m(prec);
    mpfr_log(log_m.get(), m.get(), MPFR_RNDN);
    Mpfr log2(prec);
    mpfr_const_log2(log2.get(), MPFR_RNDN);
    mpfr_mul_ui(log2.get(), log2.get(), 2, MPFR_RNDN);
    mpfr_sqr(bound.get(), m.get(), MPFR_RNDN);
    mpfr_mul(bound.get(), bound.get(), log_m.get(), MPFR_RNDN);
    mpfr_div(bound.get(), bound.get(), log2.get(), MPFR_RNDN);
    const Rational nq(n);
    const Rational qv = a * nq * nq + b * nq + c;
    mpfr_set_q(q.get(), qv.get_mpq_t(), MPFR_RNDN);
  }

  bool exceeds(const BigInt& n) const {
    Mpfr bound(prec);
    Mpfr q(prec);
    values(n, bound, q);
    return mpfr_greater_p(bound.get(), q.get()) != 0;
  }
};

BigInt first_sustained(const Comparator& cmp) {
  // With m = n + 2 and q = a m^2 + b' m + c', bound(n) - q(n) = m^2 phi(m),
  // phi(m) = ln m / (2 ln 2) - a - b'/m - c'/m^2, which is increasing once
  // m^2 / (2 ln 2) > |b'| m + 2 |c'|. That holds from m0 below on.
  const Rational b1 = cmp.b - 4 * cmp.a;
  const Rational c1 = 4 * cmp.a - 2 * cmp.b + cmp.c;
  const double k = 1.39;  // > 2 ln 2
  const double m0 = std::ceil(k * std::abs(b1.get_d()) + std::sqrt(2.0 * k * std::abs(c1.get_d()))) + 2.0;
  if (m0 > 1e7) throw InputError("hilbert_bounds", "coefficients too large for the crossover scan");
  const BigInt monotone_from = std::max<long>(0, static_cast<long>(m0) - 2);

  std::optional<BigInt> last_fail;
  for (BigInt n = 0; n < monotone_from; ++n)
    if (!cmp.exceeds(n)) last_fail = n;
  if (cmp.exceeds(monotone_from)) return last_fail ? BigInt(*last_fail + 1) : BigInt(0);

  BigInt lo = monotone_from;  // fails
  BigInt step = 1;
  BigInt hi = monotone_from + step;
  while (!cmp.exceeds(hi)) {
    lo = hi;
    step *= 2;
    hi = monotone_from + step;
  }
  while (hi - lo > 1) {
    const BigInt mid = (lo + hi) / 2;
    if (cmp.exceeds(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

}  // namespace

Crossover hanli_crossover(const Rational& a, const Rational& b, const Rational& c, unsigned precision_bits) {
  if (sgn(a) < 0) throw InputError("hilbert_bounds", "leading coefficient must be nonnegative");
  const unsigned prec = precision_bits == 0 ? default_precision_bits() : precision_bits;
  const Comparator cmp{static_cast<mpfr_prec_t>(prec), a, b, c};
  const Comparator doubled{static_cast<mpfr_prec_t>(2 * prec), a, b, c};
  Crossover out;
  out.precision_bits = prec;
  out.n = first_sustained(cmp);
  out.stable = first_sustained(doubled) == out.n;
  Mpfr bound(prec);
  Mpfr q(prec);
  cmp.values(out.n, bound, q);
  out.bound_at_n = bound.str();
  out.q_at_n = q.str();
  if (out.n > 0) {
    cmp.values(BigInt(out.n - 1), bound, q);
    out.bound_before = bound.str();
    out.q_before = q.str();
  }
  return out;
}

}  // namespace cclab
