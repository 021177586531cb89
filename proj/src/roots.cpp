#include "cclab/roots.hpp"

#include <algorithm>

#include "cclab/errors.hpp"

namespace cclab {

namespace {

UniPoly normalized(const UniPoly& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / abs(p.leading()));
}

std::size_t variations(const std::vector<int>& signs) {
  std::size_t v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

UniPoly reversed(const UniPoly& p) {
  std::vector<Rational> c = p.coeffs();
  std::reverse(c.begin(), c.end());
  return UniPoly(std::move(c), p.var());
}

struct Isolator {
  const UniPoly& sf;
  const SturmSequence& sturm;
  const Rational& max_width;
  std::vector<RationalInterval> out;

  // Roots in (lo, hi], appended in ascending order.
  void run(const Rational& lo, const Rational& hi) {
    const std::size_t c = sturm.count(lo, hi);
    if (c == 0) return;
    if (c == 1) {
      out.push_back(refine_root(sturm, sf, {lo, hi}, max_width));
      return;
    }
    const Rational mid = (lo + hi) / 2;
    run(lo, mid);
    run(mid, hi);
  }
};

BigInt primitive_leading(const UniPoly& p) {
  BigInt den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  BigInt content = 0;
  for (const auto& c : p.coeffs()) {
    const BigInt n = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
  }
  if (sgn(content) == 0) return 1;
  BigInt lead = p.leading().get_num() * (den / p.leading().get_den()) / content;
  return abs(lead);
}

void require_nonzero(const UniPoly& p) {
  if (p.is_zero()) throw InputError("exact_algebra", "root counting of the zero polynomial");
}

}  // namespace

SturmSequence::SturmSequence(const UniPoly& p) {
  if (p.is_zero()) return;
  seq_.push_back(normalized(p));
  UniPoly d = normalized(derivative(p));
  while (!d.is_zero()) {
    seq_.push_back(d);
    const std::size_t n = seq_.size();
    d = normalized(-divmod(seq_[n - 2], seq_[n - 1]).remainder);
  }
}

std::size_t SturmSequence::variations_at(const Rational& t) const {
  std::vector<int> s;
  s.reserve(seq_.size());
  for (const auto& p : seq_) s.push_back(sgn(p(t)));
  return variations(s);
}

std::size_t SturmSequence::variations_at_infinity(int direction) const {
  std::vector<int> s;
  s.reserve(seq_.size());
  for (const auto& p : seq_) {
    int sg = sgn(p.leading());
    if (direction < 0 && p.degree() % 2 == 1) sg = -sg;
    s.push_back(sg);
  }
  return variations(s);
}

std::size_t SturmSequence::count(const Rational& a, const Rational& b) const {
  if (b <= a) return 0;
  const std::size_t va = variations_at(a);
  const std::size_t vb = variations_at(b);
  return va >= vb ? va - vb : 0;
}

std::size_t SturmSequence::count_all() const {
  const std::size_t lo = variations_at_infinity(-1);
  const std::size_t hi = variations_at_infinity(+1);
  return lo >= hi ? lo - hi : 0;
}

Rational cauchy_root_bound(const UniPoly& p) {
  require_nonzero(p);
  Rational m = 0;
  const Rational lead = abs(p.leading());
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(p.coeffs()[static_cast<std::size_t>(k)]) / lead));
  return m + 1;
}

RationalInterval refine_root(const SturmSequence& sturm, const UniPoly& sf, RationalInterval iv,
                             const Rational& max_width) {
  if (iv.is_point()) return iv;
  // A rational root p/q has q dividing the leading coefficient L of the primitive integer multiple
  // of sf. Below width 1/(2L^2) it is the simplest rational of its interval, so one exact test
  // decides rationality; beyond 64-bit L the test is only attempted at the requested width.
  Rational target = max_width;
  const BigInt lead = primitive_leading(sf);
  if (mpz_sizeinbase(lead.get_mpz_t(), 2) <= 64) target = std::min(target, Rational(BigInt(1), 2 * lead * lead));
  while (iv.width() >= target) {
    const Rational mid = iv.midpoint();
    if (sgn(sf(mid)) == 0) return {mid, mid};
    if (sturm.count(iv.lo, mid) == 1)
      iv.hi = mid;
    else
      iv.lo = mid;
  }
  if (sgn(sf(iv.hi)) == 0) return {iv.hi, iv.hi};
  // The open left end may coincide with a neighbouring root; move it inward.
  while (sgn(sf(iv.lo)) == 0) {
    const Rational mid = iv.midpoint();
    if (sgn(sf(mid)) == 0) return {mid, mid};
    if (sturm.count(iv.lo, mid) == 0)
      iv.lo = mid;
    else
      iv.hi = mid;
  }
  const Rational simple = simplest_between(iv.lo, iv.hi);
  if (sgn(sf(simple)) == 0) return {simple, simple};
  return iv;
}

RealRootReport sturm_real_root_count(const UniPoly& p, const RootIsolationOptions& opts) {
  require_nonzero(p);
  RealRootReport report;
  const UniPoly sf = square_free_part(p);
  report.square_free_applied = sf.degree() < p.degree();
  if (sf.degree() < 1) return report;
  const SturmSequence sturm(sf);
  const Rational bound = cauchy_root_bound(sf);
  Isolator iso{sf, sturm, opts.max_width, {}};
  iso.run(-bound, bound);
  report.isolating_intervals = std::move(iso.out);
  report.count = report.isolating_intervals.size();
  if (report.count != sturm.count_all())
    throw InternalError("exact_algebra", "root isolation disagrees with the Sturm count");
  return report;
}

RealRootReport sturm_real_root_count(const UniPoly& p, const Rational& a, const Rational& b,
                                     const RootIsolationOptions& opts) {
  require_nonzero(p);
  if (b < a) throw InputError("exact_algebra", "empty interval for root counting");
  RealRootReport report;
  const UniPoly sf = square_free_part(p);
  report.square_free_applied = sf.degree() < p.degree();
  if (sf.degree() < 1) return report;
  const SturmSequence sturm(sf);
  Isolator iso{sf, sturm, opts.max_width, {}};
  if (sgn(sf(a)) == 0) iso.out.push_back({a, a});
  iso.run(a, b);
  report.isolating_intervals = std::move(iso.out);
  report.count = report.isolating_intervals.size();
  return report;
}

RealRootReport positive_real_roots(const UniPoly& p, const RootIsolationOptions& opts) {
  require_nonzero(p);
  RealRootReport report;
  UniPoly sf = square_free_part(p);
  report.square_free_applied = sf.degree() < p.degree();
  if (sf.degree() >= 1 && sgn(sf[0]) == 0) sf = exact_div(sf, UniPoly::monomial(1, Rational(1), sf.var()));
  if (sf.degree() < 1) return report;
  const SturmSequence sturm(sf);
  const Rational upper = cauchy_root_bound(sf);
  const Rational lower = 1 / cauchy_root_bound(reversed(sf));
  Isolator iso{sf, sturm, opts.max_width, {}};
  iso.run(lower, upper);
  report.isolating_intervals = std::move(iso.out);
  report.count = report.isolating_intervals.size();
  return report;
}

}  // namespace cclab
