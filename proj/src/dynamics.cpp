#include "cclab/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

namespace cclab {

const char* to_string(Stability s) {
  switch (s) {
    case Stability::stable:
      return "stable";
    case Stability::unstable:
      return "unstable";
    case Stability::semi_stable:
      return "semi_stable";
  }
  return "unknown";
}

const char* to_string(CycleSource s) {
  return s == CycleSource::exact_radial ? "exact_radial" : "numeric_poincare";
}

// ---------------------------------------------------------------------------
// Radial (rigidly rotating) systems

RadialForm detect_radial_form(const PlanarSystem& sys) {
  RadialForm form;
  const VarNames& v = sys.vars();
  const Poly2 x = Poly2::variable(v, 0);
  const Poly2 y = Poly2::variable(v, 1);
  const Poly2 a = sys.P + y;  // must be x * h
  Poly2 h(v);
  for (const auto& [e, c] : a.terms()) {
    if (e.i == 0) return form;
    h.add_term({e.i - 1, e.j}, c);
  }
  std::vector<Rational> f;
  for (const auto& [e, c] : h.terms()) {
    if (e.j != 0) continue;
    if (e.i % 2 != 0) return form;
    const std::size_t k = e.i / 2;
    if (f.size() <= k) f.resize(k + 1);
    f[k] = c;
  }
  const UniPoly fs(std::move(f), "s");
  const Poly2 radius_sq = x * x + y * y;
  Poly2 composed(v);
  Poly2 power(v, Rational(1));
  for (std::size_t k = 0; k < fs.coeffs().size(); ++k) {
    composed += fs.coeffs()[k] * power;
    power = power * radius_sq;
  }
  if (!(composed == h)) return form;
  if (!(sys.Q - x == y * composed)) return form;
  form.f = fs;
  form.matched = true;
  return form;
}

namespace {

// Sign of f just below and just above an isolated root of its square-free part.
std::pair<int, int> signs_around(const UniPoly& f, const UniPoly& sf, const RationalInterval& iv) {
  if (!iv.is_point()) return {sgn(f(iv.lo)), sgn(f(iv.hi))};
  const SturmSequence sturm(sf);
  Rational delta(1, 2);
  while (sturm.count(iv.lo - delta, iv.lo + delta) != 1 || sgn(sf(iv.lo - delta)) == 0) delta /= 2;
  return {sgn(f(iv.lo - delta)), sgn(f(iv.lo + delta))};
}

}  // namespace

LimitCycleReport exact_radial_cycles(const RadialForm& form) {
  if (!form.matched) throw InputError("dynamics", "system is not of rigid radial form");
  LimitCycleReport rep;
  if (form.f.is_zero()) {
    rep.center_flag = true;
    rep.notes.push_back("f vanishes identically: every circle is periodic");
    return rep;
  }
  RootIsolationOptions iso;
  iso.max_width = Rational(1, BigInt(1) << 64);
  const RealRootReport roots = positive_real_roots(form.f, iso);
  const UniPoly sf = square_free_part(form.f);
  const UniPoly repeated = gcd(form.f, derivative(form.f));
  const BigInt scale = BigInt(1) << 64;
  for (const auto& iv : roots.isolating_intervals) {
    LimitCycle c;
    c.source = CycleSource::exact_radial;
    c.period = 2.0 * std::numbers::pi;
    c.s_interval = iv;
    const SqrtBounds lo = sqrt_bounds(iv.lo, scale);
    const SqrtBounds hi = sqrt_bounds(iv.hi, scale);
    c.radius_interval = RationalInterval{lo.lo, hi.hi};
    c.radius = iv.is_point() ? std::sqrt(iv.lo.get_d()) : std::sqrt(iv.midpoint().get_d());
    const auto [below, above] = signs_around(form.f, sf, iv);
    if (below < 0 && above > 0)
      c.stability = Stability::unstable;
    else if (below > 0 && above < 0)
      c.stability = Stability::stable;
    else
      c.stability = Stability::semi_stable;
    const bool multiple = repeated.degree() >= 1 && sturm_real_root_count(repeated, iv.lo, iv.hi).count > 0;
    if (multiple) c.note = "multiple root of f";
    rep.cycles.push_back(std::move(c));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Integration

VectorField::VectorField(const PlanarSystem& sys) : p_(sys.P), q_(sys.Q) {}

namespace {

using State = std::array<double, 2>;

State axpy(const State& y, double h, std::initializer_list<std::pair<double, const State*>> terms) {
  State out = y;
  for (const auto& [c, k] : terms) {
    out[0] += h * c * (*k)[0];
    out[1] += h * c * (*k)[1];
  }
  return out;
}

bool finite(const State& s) { return std::isfinite(s[0]) && std::isfinite(s[1]); }

}  // namespace

RkStep dormand_prince_step(const VectorField& f, const State& y, double h) {
  const State k1 = f(y);
  const State k2 = f(axpy(y, h, {{1.0 / 5.0, &k1}}));
  const State k3 = f(axpy(y, h, {{3.0 / 40.0, &k1}, {9.0 / 40.0, &k2}}));
  const State k4 = f(axpy(y, h, {{44.0 / 45.0, &k1}, {-56.0 / 15.0, &k2}, {32.0 / 9.0, &k3}}));
  const State k5 = f(axpy(y, h,
                          {{19372.0 / 6561.0, &k1}, {-25360.0 / 2187.0, &k2}, {64448.0 / 6561.0, &k3},
                           {-212.0 / 729.0, &k4}}));
  const State k6 = f(axpy(y, h,
                          {{9017.0 / 3168.0, &k1}, {-355.0 / 33.0, &k2}, {46732.0 / 5247.0, &k3},
                           {49.0 / 176.0, &k4}, {-5103.0 / 18656.0, &k5}}));
  const State y5 = axpy(y, h,
                        {{35.0 / 384.0, &k1}, {500.0 / 1113.0, &k3}, {125.0 / 192.0, &k4},
                         {-2187.0 / 6784.0, &k5}, {11.0 / 84.0, &k6}});
  const State k7 = f(y5);
  const State err = axpy({0.0, 0.0}, h,
                         {{71.0 / 57600.0, &k1}, {-71.0 / 16695.0, &k3}, {71.0 / 1920.0, &k4},
                          {-17253.0 / 339200.0, &k5}, {22.0 / 525.0, &k6}, {-1.0 / 40.0, &k7}});
  return {y5, err};
}

namespace {

// Error-controlled stepping; each call to advance() takes one accepted step.
class AdaptiveStepper {
 public:
  AdaptiveStepper(const VectorField& f, State y0, const IntegratorOptions& opts)
      : f_(f), opts_(opts), y_(y0), h_(opts.initial_step) {}

  double t() const { return t_; }
  const State& y() const { return y_; }
  double prev_t() const { return prev_t_; }
  const State& prev_y() const { return prev_y_; }
  std::size_t accepted() const { return accepted_; }
  std::size_t rejected() const { return rejected_; }

  void advance(double t_limit) {
    while (true) {
      double h = std::min({h_, opts_.max_step, t_limit - t_});
      if (h < opts_.min_step * std::max(1.0, std::abs(t_)))
        throw IntegrationError(IntegrationError::Kind::divergence, "step size underflow", t_, y_);
      if (accepted_ + rejected_ >= opts_.max_steps)
        throw IntegrationError(IntegrationError::Kind::divergence, "step budget exhausted", t_, y_);
      const RkStep s = dormand_prince_step(f_, y_, h);
      double err = 0.0;
      if (finite(s.y)) {
        for (int i = 0; i < 2; ++i) {
          const double sc = opts_.atol + opts_.rtol * std::max(std::abs(y_[i]), std::abs(s.y[i]));
          err += (s.error[i] / sc) * (s.error[i] / sc);
        }
        err = std::sqrt(err / 2.0);
      } else {
        err = std::numeric_limits<double>::infinity();
      }
      if (err <= 1.0) {
        prev_t_ = t_;
        prev_y_ = y_;
        t_ += h;
        y_ = s.y;
        ++accepted_;
        const double grow = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        if (h == h_ || grow < 1.0) h_ = h * grow;
        if (std::hypot(y_[0], y_[1]) > opts_.escape_radius)
          throw IntegrationError(IntegrationError::Kind::divergence, "trajectory escaped", t_, y_);
        return;
      }
      ++rejected_;
      h_ = h * (std::isfinite(err) ? std::clamp(0.9 * std::pow(err, -0.2), 0.2, 1.0) : 0.2);
    }
  }

 private:
  const VectorField& f_;
  const IntegratorOptions& opts_;
  State y_;
  State prev_y_{};
  double t_ = 0.0;
  double prev_t_ = 0.0;
  double h_;
  std::size_t accepted_ = 0;
  std::size_t rejected_ = 0;
};

}  // namespace

Trajectory integrate(const PlanarSystem& sys, State start, double t_end, const IntegratorOptions& opts) {
  if (!(t_end > 0.0)) throw InputError("dynamics", "t_end must be positive");
  if (!(opts.rtol > 0.0) || !(opts.atol > 0.0)) throw InputError("dynamics", "tolerances must be positive");
  const VectorField f(sys);
  AdaptiveStepper stepper(f, start, opts);
  Trajectory traj;
  traj.options = opts;
  traj.samples.push_back({0.0, start[0], start[1]});
  while (stepper.t() < t_end) {
    stepper.advance(t_end);
    traj.samples.push_back({stepper.t(), stepper.y()[0], stepper.y()[1]});
  }
  traj.accepted_steps = stepper.accepted();
  traj.rejected_steps = stepper.rejected();
  return traj;
}

Trajectory integrate_fixed(const PlanarSystem& sys, State start, double t_end, double h) {
  if (!(t_end > 0.0) || !(h > 0.0)) throw InputError("dynamics", "t_end and h must be positive");
  const VectorField f(sys);
  Trajectory traj;
  traj.samples.push_back({0.0, start[0], start[1]});
  const auto n = static_cast<std::size_t>(std::llround(t_end / h));
  State y = start;
  for (std::size_t k = 1; k <= n; ++k) {
    y = dormand_prince_step(f, y, h).y;
    traj.samples.push_back({static_cast<double>(k) * h, y[0], y[1]});
  }
  traj.accepted_steps = n;
  return traj;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj, const std::map<std::string, std::string>& meta) {
  for (const auto& [k, v] : meta) out << "# " << k << ": " << v << "\n";
  out << "# rtol: " << traj.options.rtol << "\n# atol: " << traj.options.atol << "\n";
  out << "# accepted_steps: " << traj.accepted_steps << "\n# rejected_steps: " << traj.rejected_steps << "\n";
  out << "t,x,y\n";
  const auto old_precision = out.precision(17);
  for (const auto& s : traj.samples) out << s[0] << "," << s[1] << "," << s[2] << "\n";
  out.precision(old_precision);
}

// ---------------------------------------------------------------------------
// Return map

ReturnResult poincare_return_full(const PlanarSystem& sys, double r0, const PoincareOptions& opts) {
  if (!(r0 > 0.0)) throw InputError("dynamics", "section start must be positive");
  if (sgn(evaluate(sys.P, Rational(0), Rational(0))) != 0 || sgn(evaluate(sys.Q, Rational(0), Rational(0))) != 0)
    throw InputError("dynamics", "the origin is not an equilibrium; translate the system first");
  const VectorField f(sys);
  const State start{r0, 0.0};
  const double qdot = f(start)[1];
  if (qdot == 0.0)
    throw IntegrationError(IntegrationError::Kind::not_transversal, "flow is tangent to the section", 0.0, start);
  const double orient = qdot > 0.0 ? 1.0 : -1.0;

  AdaptiveStepper stepper(f, start, opts.integrator);
  double prev_event = 0.0;
  while (true) {
    if (stepper.t() >= opts.t_max)
      throw IntegrationError(IntegrationError::Kind::no_return, "no return to the section", stepper.t(), stepper.y());
    stepper.advance(opts.t_max);
    const State& y = stepper.y();
    if (std::hypot(y[0], y[1]) < opts.r_min)
      throw IntegrationError(IntegrationError::Kind::fell_into_equilibrium, "trajectory fell into the equilibrium",
                             stepper.t(), y);
    const double event = orient * y[1];
    if (prev_event < 0.0 && event >= 0.0 && y[0] > 0.0) {
      // Bisection on the step fraction; states come from a single step taken
      // from the start of the bracketing step.
      const State& base = stepper.prev_y();
      double lo = 0.0;
      double hi = stepper.t() - stepper.prev_t();
      State at_hi = y;
      while (hi - lo > opts.event_tolerance) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const State s = dormand_prince_step(f, base, mid).y;
        if (orient * s[1] < 0.0) {
          lo = mid;
        } else {
          hi = mid;
          at_hi = s;
        }
      }
      return {at_hi[0], stepper.prev_t() + hi};
    }
    prev_event = event;
  }
}

double poincare_return(const PlanarSystem& sys, double r0, const PoincareOptions& opts) {
  return poincare_return_full(sys, r0, opts).position;
}

namespace {

struct Probe {
  double r = 0.0;
  int sign = 0;  // sign of the displacement; 0 when unknown
  std::optional<ReturnResult> ret;
  std::string error;
};

Probe probe(const PlanarSystem& sys, double r, const PoincareOptions& opts) {
  Probe p;
  p.r = r;
  try {
    p.ret = poincare_return_full(sys, r, opts);
    const double d = p.ret->position - r;
    p.sign = d > 0.0 ? 1 : d < 0.0 ? -1 : 0;
  } catch (const IntegrationError& e) {
    p.error = e.what();
    if (e.kind() == IntegrationError::Kind::divergence)
      p.sign = 1;
    else if (e.kind() == IntegrationError::Kind::fell_into_equilibrium)
      p.sign = -1;
  }
  return p;
}

double displacement(const Probe& p) { return p.ret ? p.ret->position - p.r : std::nan(""); }

}  // namespace

LimitCycleReport find_cycles_numeric(const PlanarSystem& sys, double r_lo, double r_hi, int n_scan,
                                     const ScanOptions& opts) {
  if (!(r_lo > 0.0) || !(r_hi > r_lo)) throw InputError("dynamics", "scan range must satisfy 0 < r_lo < r_hi");
  if (n_scan < 2) throw InputError("dynamics", "scan needs at least two grid points");
  LimitCycleReport rep;
  rep.annulus = std::array<double, 2>{r_lo, r_hi};

  std::vector<double> grid(static_cast<std::size_t>(n_scan));
  const double ratio = std::log(r_hi / r_lo);
  for (int k = 0; k < n_scan; ++k) grid[static_cast<std::size_t>(k)] = r_lo * std::exp(ratio * k / (n_scan - 1));
  grid.front() = r_lo;
  grid.back() = r_hi;
  if (opts.descending) std::reverse(grid.begin(), grid.end());

  std::vector<Probe> probes;
  probes.reserve(grid.size());
  for (double r : grid) probes.push_back(probe(sys, r, opts.poincare));
  std::sort(probes.begin(), probes.end(), [](const Probe& a, const Probe& b) { return a.r < b.r; });

  // Probes whose displacement sits below the center tolerance are treated as quiet: their sign is
  // integration noise and never opens a bracket on its own.
  std::size_t returned = 0;
  std::size_t quiet = 0;
  std::vector<int> eff(probes.size(), 0);
  for (std::size_t k = 0; k < probes.size(); ++k) {
    const Probe& p = probes[k];
    if (!p.error.empty()) rep.notes.push_back("r = " + std::to_string(p.r) + ": " + p.error);
    if (p.ret) ++returned;
    const bool is_quiet = p.ret && std::abs(displacement(p)) < opts.center_tolerance;
    if (is_quiet) ++quiet;
    eff[k] = is_quiet ? 0 : p.sign;
  }
  auto is_quiet = [&](std::size_t k) { return probes[k].ret && eff[k] == 0; };

  if (quiet >= 2 && quiet == returned) {
    rep.center_flag = true;
    rep.notes.push_back("displacement vanishes at every returning probe: continuum of periodic orbits");
    if (returned < probes.size()) {
      double lo = 0.0, hi = 0.0;
      bool first = true;
      for (const auto& p : probes)
        if (p.ret) {
          if (first) lo = p.r;
          hi = p.r;
          first = false;
        }
      rep.notes.push_back("periodic orbits observed for r in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          "]; probes outside that band did not return");
    }
    return rep;
  }

  auto bisect = [&](const Probe& left, const Probe& right, int left_sign) {
    double a = left.r;
    double b = right.r;
    std::optional<Probe> best = left.ret ? std::optional<Probe>(left) : std::optional<Probe>();
    if (right.ret && (!best || std::abs(displacement(right)) < std::abs(displacement(*best)))) best = right;
    std::optional<double> root;
    while (true) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b || b - a < 1e-13 * b) break;
      const Probe m = probe(sys, mid, opts.poincare);
      if (m.ret && (!best || std::abs(displacement(m)) <= std::abs(displacement(*best)))) best = m;
      if (m.ret && std::abs(displacement(m)) < opts.displacement_tolerance) {
        root = mid;
        break;
      }
      if (m.sign == 0) break;
      if (m.sign == left_sign)
        a = mid;
      else
        b = mid;
    }
    LimitCycle c;
    c.source = CycleSource::numeric_poincare;
    c.radius = root.value_or(0.5 * (a + b));
    c.period = best ? best->ret->time : std::nan("");
    c.stability = left_sign < 0 ? Stability::unstable : Stability::stable;
    if (!root) c.note = "bracket reached rounding level before |d| met the tolerance";
    rep.cycles.push_back(std::move(c));
  };

  // Walk consecutive probes with a definite sign. Between two of them lies either nothing, a single
  // quiet probe (an isolated zero near a grid point), or a quiet band that is reported but not counted.
  std::optional<std::size_t> prev;
  auto flush_band = [&](std::size_t from, std::size_t to) {
    std::size_t run = 0;
    for (std::size_t k = from; k < to; ++k) run += is_quiet(k) ? 1 : 0;
    return run;
  };
  for (std::size_t k = 0; k < probes.size(); ++k) {
    if (eff[k] == 0) continue;
    if (prev) {
      const std::size_t i = *prev;
      bool unknown_between = false;
      for (std::size_t m = i + 1; m < k; ++m) unknown_between = unknown_between || !probes[m].ret;
      const std::size_t band = flush_band(i + 1, k);
      if (unknown_between) {
        rep.notes.push_back("probes between r = " + std::to_string(probes[i].r) + " and r = " +
                            std::to_string(probes[k].r) + " have no usable displacement; interval skipped");
      } else if (band == 0) {
        if (eff[i] != eff[k]) bisect(probes[i], probes[k], eff[i]);
      } else if (band == 1) {
        if (eff[i] != eff[k]) {
          bisect(probes[i], probes[k], eff[i]);
        } else {
          const Probe& p = probes[i + 1];
          LimitCycle c;
          c.source = CycleSource::numeric_poincare;
          c.radius = p.r;
          c.period = p.ret->time;
          c.stability = Stability::semi_stable;
          c.note = "displacement touches zero without changing sign";
          rep.cycles.push_back(std::move(c));
        }
      } else {
        rep.notes.push_back("band of vanishing displacement between r = " + std::to_string(probes[i + 1].r) +
                            " and r = " + std::to_string(probes[k - 1].r) + "; no isolated cycle claimed");
      }
    }
    prev = k;
  }
  std::sort(rep.cycles.begin(), rep.cycles.end(), [](const LimitCycle& a, const LimitCycle& b) { return a.radius < b.radius; });
  return rep;
}

PlanarSystem translate_to_origin(const PlanarSystem& sys, const Rational& x0, const Rational& y0) {
  const Matrix2 identity{{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}};
  return transform(sys, identity, {x0, y0}, sys.vars());
}

}  // namespace cclab
