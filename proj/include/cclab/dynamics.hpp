#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cclab/errors.hpp"
#include "cclab/roots.hpp"
#include "cclab/system.hpp"
#include "cclab/unipoly.hpp"

namespace cclab {

// x' = -y + x f(x^2+y^2), y' = x + y f(x^2+y^2); in polar form r' = r f(r^2),
// theta' = 1.
struct RadialForm {
  UniPoly f{UniPoly::zero("s")};
  bool matched = false;
};

/// Exact structural match; f is extracted when the identities hold.
RadialForm detect_radial_form(const PlanarSystem& sys);

enum class Stability { stable, unstable, semi_stable };
enum class CycleSource { exact_radial, numeric_poincare };
const char* to_string(Stability s);
const char* to_string(CycleSource s);

struct LimitCycle {
  double radius = 0.0;  // crossing abscissa on the positive first-variable axis
  double period = 0.0;
  Stability stability = Stability::unstable;
  CycleSource source = CycleSource::numeric_poincare;
  std::optional<RationalInterval> s_interval;       // exact_radial: root of f
  std::optional<RationalInterval> radius_interval;  // exact_radial: sqrt bounds
  std::string note;
};

struct LimitCycleReport {
  std::vector<LimitCycle> cycles;
  bool center_flag = false;
  // Annulus (on the section) the claim covers; empty for exact radial results.
  std::optional<std::array<double, 2>> annulus;
  std::vector<std::string> notes;

  std::size_t cycle_count() const { return cycles.size(); }
};

/// Cycles at r = sqrt(s*) for the positive roots s* of f. Throws InputError
/// when the form did not match.
LimitCycleReport exact_radial_cycles(const RadialForm& form);

class IntegrationError : public Error {
 public:
  enum class Kind { divergence, no_return, fell_into_equilibrium, not_transversal };
  IntegrationError(Kind kind, const std::string& what, double t, std::array<double, 2> state)
      : Error("dynamics", what), kind_(kind), t_(t), state_(state) {}
  Kind kind() const noexcept { return kind_; }
  double time() const noexcept { return t_; }
  std::array<double, 2> state() const noexcept { return state_; }

 private:
  Kind kind_;
  double t_;
  std::array<double, 2> state_;
};

struct IntegratorOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  double initial_step = 1e-3;
  double max_step = 0.1;
  double min_step = 1e-14;  // relative to max(1, |t|)
  double escape_radius = 1e8;
  std::size_t max_steps = 20'000'000;
};

struct Trajectory {
  std::vector<std::array<double, 3>> samples;  // (t, x, y), t strictly increasing
  IntegratorOptions options;
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
};

/// Vector field compiled to double-precision evaluators.
class VectorField {
 public:
  explicit VectorField(const PlanarSystem& sys);
  std::array<double, 2> operator()(const std::array<double, 2>& z) const {
    return {p_(z[0], z[1]), q_(z[0], z[1])};
  }

 private:
  CompiledPoly2 p_;
  CompiledPoly2 q_;
};

/// One Dormand-Prince 5(4) step: fifth-order solution and the embedded error
/// estimate (difference of the two solutions).
struct RkStep {
  std::array<double, 2> y;
  std::array<double, 2> error;
};
RkStep dormand_prince_step(const VectorField& f, const std::array<double, 2>& y, double h);

/// Adaptive integration from `start` over [0, t_end]; every accepted step is
/// sampled. Throws IntegrationError on step underflow or escape.
Trajectory integrate(const PlanarSystem& sys, std::array<double, 2> start, double t_end,
                     const IntegratorOptions& opts = {});

/// Same scheme at a fixed step size (for convergence checks).
Trajectory integrate_fixed(const PlanarSystem& sys, std::array<double, 2> start, double t_end, double h);

void write_trajectory_csv(std::ostream& out, const Trajectory& traj, const std::map<std::string, std::string>& meta);

struct PoincareOptions {
  // Tight by default: near an unstable cycle the return map amplifies local
  // errors by exp(2 pi |f'|) per revolution.
  IntegratorOptions integrator{.rtol = 1e-13, .atol = 1e-15};
  double t_max = 1e3;
  double r_min = 1e-6;
  double event_tolerance = 1e-12;
};

struct ReturnResult {
  double position = 0.0;  // abscissa of the first return
  double time = 0.0;      // return time
};

/// First return to the positive axis of the first variable, starting from
/// (r0, 0) and crossing in the same rotational sense. The origin must be an
/// equilibrium (translate the system otherwise).
ReturnResult poincare_return_full(const PlanarSystem& sys, double r0, const PoincareOptions& opts = {});
double poincare_return(const PlanarSystem& sys, double r0, const PoincareOptions& opts = {});

struct ScanOptions {
  PoincareOptions poincare;
  double displacement_tolerance = 1e-9;
  double center_tolerance = 1e-8;
  bool descending = false;
};

/// Sign changes of d(r) = return(r) - r on a geometric grid, refined by
/// bisection. A trajectory that escapes counts as d > 0 and one that falls
/// into the equilibrium as d < 0.
LimitCycleReport find_cycles_numeric(const PlanarSystem& sys, double r_lo, double r_hi, int n_scan,
                                     const ScanOptions& opts = {});

/// Shifts the equilibrium (x0, y0) to the origin.
PlanarSystem translate_to_origin(const PlanarSystem& sys, const Rational& x0, const Rational& y0);

}  // namespace cclab
