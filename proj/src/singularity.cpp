#include "cclab/singularity.hpp"

#include <algorithm>
#include <array>

#include "cclab/interval.hpp"
#include "cclab/resultant.hpp"

namespace cclab {

const char* to_string(NeighborhoodSign s) {
  switch (s) {
    case NeighborhoodSign::positive:
      return "positive_neighborhood";
    case NeighborhoodSign::negative:
      return "negative_neighborhood";
    case NeighborhoodSign::not_continuous:
      return "not_continuous_here";
    case NeighborhoodSign::zero_at_point:
      return "zero_at_point";
  }
  return "unknown";
}

const char* to_string(SolutionStatus s) {
  switch (s) {
    case SolutionStatus::empty_certified:
      return "empty_certified";
    case SolutionStatus::isolated_points:
      return "isolated_points";
    case SolutionStatus::degenerate_branch:
      return "degenerate_branch";
  }
  return "unknown";
}

const char* to_string(DivergenceStatus s) {
  switch (s) {
    case DivergenceStatus::certified:
      return "certified";
    case DivergenceStatus::indeterminate:
      return "indeterminate";
  }
  return "unknown";
}

const char* to_string(AssertionA a) {
  switch (a) {
    case AssertionA::holds:
      return "holds";
    case AssertionA::fails_R_negative:
      return "fails_R_negative";
    case AssertionA::fails_no_singularity:
      return "fails_no_singularity";
    case AssertionA::fails_indeterminate:
      return "fails_indeterminate";
  }
  return "unknown";
}

EquilibriumCertificate verify_equilibrium(const PlanarSystem& sys, const Rational& x, const Rational& y) {
  EquilibriumCertificate cert{x, y, evaluate(sys.P, x, y), evaluate(sys.Q, x, y), std::nullopt};
  const MetricComponents m = metric_components(sys);
  if (!m.G.is_zero()) cert.R_at_point = evaluate_R(scalar_curvature(m), x, y);
  return cert;
}

NeighborhoodSign sign_of_R_near_equilibrium(const PlanarSystem& sys, const Rational& x, const Rational& y) {
  const EquilibriumCertificate cert = verify_equilibrium(sys, x, y);
  if (!cert.valid())
    throw InputError("singularity", "(" + to_string(x) + ", " + to_string(y) + ") is not an equilibrium");
  if (!cert.R_at_point) throw DegenerateMetricError("metric determinant G vanishes identically");
  const auto* value = std::get_if<Rational>(&*cert.R_at_point);
  if (value == nullptr) return NeighborhoodSign::not_continuous;
  const int s = sgn(*value);
  if (s > 0) return NeighborhoodSign::positive;
  if (s < 0) return NeighborhoodSign::negative;
  return NeighborhoodSign::zero_at_point;
}

namespace {

struct DirectionRoots {
  UniPoly square_free;
  std::optional<SturmSequence> sturm;
  std::vector<RationalInterval> roots;
};

std::string var_of(const Poly2& p, int index) { return p.vars()[index]; }

// Examines where both leading coefficients in the eliminated variable can
// vanish together with the eliminant, i.e. where the Sylvester formal degrees
// drop. Rational candidates are settled by an exact univariate gcd.
void check_leading_locus(const Poly2& f, const Poly2& g, Eliminant& el) {
  const int d = el.eliminated;
  const int other = d == 0 ? 1 : 0;
  const UniPoly lcf = f.coefficients_in(d).back();
  const UniPoly lcg = g.coefficients_in(d).back();
  const UniPoly product = lcf * lcg;
  if (product.degree() < 1) {
    el.notes.push_back("leading coefficients in " + var_of(f, d) + " are constant");
    return;
  }
  const UniPoly common = gcd(product, el.polynomial);
  if (common.degree() < 1) {
    el.notes.push_back("leading-coefficient locus shares no root with the eliminant");
    return;
  }
  const RealRootReport rr = sturm_real_root_count(common);
  el.leading_locus_candidates = rr.count;
  for (const auto& iv : rr.isolating_intervals) {
    if (!iv.is_point()) {
      el.notes.push_back("irrational leading-coefficient candidate near " + var_of(f, other) + " = " +
                         std::to_string(iv.midpoint().get_d()) + " left to box verification");
      continue;
    }
    const UniPoly fs = specialize(f, other, iv.lo);
    const UniPoly gs = specialize(g, other, iv.lo);
    std::size_t shared = 0;
    if (fs.is_zero() && gs.is_zero()) {
      el.notes.push_back("both equations vanish on " + var_of(f, other) + " = " + to_string(iv.lo));
      continue;
    }
    const UniPoly h = fs.is_zero() ? gs : gs.is_zero() ? fs : gcd(fs, gs);
    if (h.degree() >= 1) shared = sturm_real_root_count(h).count;
    el.notes.push_back("at " + var_of(f, other) + " = " + to_string(iv.lo) + ": " + std::to_string(shared) +
                       " common real root(s)");
  }
}

RationalInterval enclose(const Poly2& p, const IsolatedSolution& s) {
  if (s.exact()) {
    const Rational v = evaluate(p, s.x.lo, s.y.lo);
    return {v, v};
  }
  return evaluate(p, s.x, s.y);
}

bool strictly_inside(const RationalInterval& inner, const RationalInterval& outer) {
  return outer.lo < inner.lo && inner.hi < outer.hi;
}

// Krawczyk operator K(X) = m - Y F(m) + (I - Y J(X)) (X - m) with Y = J(m)^-1;
// K(X) inside the interior of X proves a unique zero of (f, g) in X.
bool krawczyk_verifies(const Poly2& f, const Poly2& g, const IsolatedSolution& box) {
  const Rational mx = box.x.midpoint();
  const Rational my = box.y.midpoint();
  const std::array<Poly2, 2> F{f, g};
  std::array<std::array<Poly2, 2>, 2> J;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) J[i][j] = partial_derivative(F[i], j);
  Rational Jm[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) Jm[i][j] = evaluate(J[i][j], mx, my);
  const Rational det = Jm[0][0] * Jm[1][1] - Jm[0][1] * Jm[1][0];
  if (sgn(det) == 0) return false;
  const Rational Y[2][2] = {{Jm[1][1] / det, -Jm[0][1] / det}, {-Jm[1][0] / det, Jm[0][0] / det}};
  const Rational Fm[2] = {evaluate(f, mx, my), evaluate(g, mx, my)};
  RationalInterval JX[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) JX[i][j] = evaluate(J[i][j], box.x, box.y);
  const RationalInterval dx{box.x.lo - mx, box.x.hi - mx};
  const RationalInterval dy{box.y.lo - my, box.y.hi - my};
  const Rational m[2] = {mx, my};
  RationalInterval K[2];
  for (int i = 0; i < 2; ++i) {
    RationalInterval row[2];
    for (int j = 0; j < 2; ++j) {
      const Rational delta(i == j ? 1 : 0);
      row[j] = RationalInterval{delta, delta} + scale(JX[0][j], Rational(-Y[i][0])) + scale(JX[1][j], Rational(-Y[i][1]));
    }
    const Rational centre = m[i] - (Y[i][0] * Fm[0] + Y[i][1] * Fm[1]);
    K[i] = RationalInterval{centre, centre} + row[0] * dx + row[1] * dy;
  }
  return strictly_inside(K[0], box.x) && strictly_inside(K[1], box.y);
}

}  // namespace

SubsystemReport real_solutions_2x2(const Poly2& f, const Poly2& g, const SolveOptions& opts) {
  if (f.vars() != g.vars()) throw InputError("singularity", "subsystem polynomials use different variables");
  if (f.is_zero() && g.is_zero()) throw InputError("singularity", "both equations are identically zero");
  SubsystemReport rep{f, g, SolutionStatus::empty_certified, {}, {}, {}};

  if (f.is_zero() || g.is_zero()) {
    const Poly2& h = f.is_zero() ? g : f;
    if (h.is_constant()) {
      rep.notes.push_back("one equation is a nonzero constant");
    } else {
      rep.status = SolutionStatus::degenerate_branch;
      rep.notes.push_back("one equation vanishes identically; the zero set is a curve");
    }
    return rep;
  }
  if (f.is_constant() || g.is_constant()) {
    rep.notes.push_back("one equation is a nonzero constant");
    return rep;
  }
  for (int d = 0; d < 2; ++d) {
    if (f.degree_in(d) != 0 || g.degree_in(d) != 0) continue;
    // Neither equation involves this variable: solutions are whole lines.
    const UniPoly h = gcd(f.coefficients_in(d)[0], g.coefficients_in(d)[0]);
    const std::size_t n = h.degree() >= 1 ? sturm_real_root_count(h).count : 0;
    if (n == 0) {
      rep.notes.push_back("equations are free of " + var_of(f, d) + " and share no real root");
    } else {
      rep.status = SolutionStatus::degenerate_branch;
      rep.notes.push_back("equations are free of " + var_of(f, d) + "; common zeros form lines");
    }
    return rep;
  }

  DirectionRoots dir[2];
  for (int d = 0; d < 2; ++d) {
    Eliminant el;
    el.eliminated = d;
    el.polynomial = resultant(f, g, d);
    if (el.polynomial.is_zero()) {
      rep.status = SolutionStatus::degenerate_branch;
      rep.notes.push_back("resultant in " + var_of(f, d) + " vanishes identically (common factor)");
      rep.eliminants.push_back(std::move(el));
      return rep;
    }
    if (el.polynomial.degree() >= 1) {
      const RealRootReport rr = sturm_real_root_count(el.polynomial, opts.isolation);
      el.real_roots = rr.count;
      // Indexed by the surviving variable.
      DirectionRoots& slot = dir[d == 0 ? 1 : 0];
      slot.square_free = square_free_part(el.polynomial);
      slot.sturm.emplace(slot.square_free);
      slot.roots = rr.isolating_intervals;
    }
    check_leading_locus(f, g, el);
    rep.eliminants.push_back(std::move(el));
  }
  for (const auto& el : rep.eliminants) {
    if (el.real_roots == 0) {
      rep.notes.push_back("eliminant in " + el.polynomial.var() + " has no real root");
      return rep;
    }
  }

  std::size_t excluded = 0;
  for (const auto& rx : dir[0].roots) {
    for (const auto& ry : dir[1].roots) {
      IsolatedSolution box{rx, ry};
      bool accepted = false;
      while (true) {
        if (box.exact()) {
          accepted = sgn(evaluate(f, box.x.lo, box.y.lo)) == 0 && sgn(evaluate(g, box.x.lo, box.y.lo)) == 0;
          break;
        }
        if (!contains_zero(enclose(f, box)) || !contains_zero(enclose(g, box))) break;
        if (box.x.width() < opts.verify_width && box.y.width() < opts.verify_width) {
          accepted = true;
          break;
        }
        if (!box.x.is_point())
          box.x = refine_root(*dir[0].sturm, dir[0].square_free, box.x, Rational(box.x.width() / 1024));
        if (!box.y.is_point())
          box.y = refine_root(*dir[1].sturm, dir[1].square_free, box.y, Rational(box.y.width() / 1024));
      }
      if (accepted) {
        if (box.exact()) {
          box.verified = true;
        } else {
          // A point coordinate has no interior, so pad it to the width of the other side first.
          const Rational w = std::max(box.x.width(), box.y.width());
          auto padded = [&](const RationalInterval& iv) {
            return iv.is_point() ? RationalInterval{iv.lo - w, iv.hi + w} : iv;
          };
          IsolatedSolution test{padded(box.x), padded(box.y)};
          if (krawczyk_verifies(f, g, test)) {
            box = test;
            box.verified = true;
          } else {
            // The zero may sit near an edge of the isolating box; retry on the box doubled about its centre.
            const Rational hx = test.x.width(), hy = test.y.width();
            const Rational cx = test.x.midpoint(), cy = test.y.midpoint();
            IsolatedSolution wide{{cx - hx, cx + hx}, {cy - hy, cy + hy}};
            if (krawczyk_verifies(f, g, wide)) {
              box = wide;
              box.verified = true;
            }
          }
        }
        rep.points.push_back(box);
      }
      else
        ++excluded;
    }
  }
  if (excluded > 0) rep.notes.push_back(std::to_string(excluded) + " candidate box(es) excluded by exact evaluation");
  const auto unverified = std::count_if(rep.points.begin(), rep.points.end(), [](const IsolatedSolution& p) { return !p.verified; });
  if (unverified > 0) rep.notes.push_back(std::to_string(unverified) + " box(es) not excluded but without an existence proof");
  rep.status = rep.points.empty() ? SolutionStatus::empty_certified : SolutionStatus::isolated_points;
  return rep;
}

bool SingularLocusReport::empty_certified() const {
  return std::all_of(subsystems.begin(), subsystems.end(),
                     [](const SubsystemReport& s) { return s.status == SolutionStatus::empty_certified; });
}

bool SingularLocusReport::has_degenerate_branch() const {
  return std::any_of(subsystems.begin(), subsystems.end(),
                     [](const SubsystemReport& s) { return s.status == SolutionStatus::degenerate_branch; });
}

std::size_t SingularLocusReport::certified_divergences() const {
  return static_cast<std::size_t>(std::count_if(points.begin(), points.end(), [](const DivergencePoint& p) {
    return p.status == DivergenceStatus::certified;
  }));
}

SingularLocusReport singular_locus(const PlanarSystem& sys, const SolveOptions& opts) {
  const MetricComponents m = metric_components(sys);
  const RationalFunction r = scalar_curvature(m);
  // D = 32 (P_x^2+Q_x^2)^2 (P_y^2+Q_y^2)^2 vanishes to order >= 4 at every zero of either block, and
  // N always vanishes there too. A partial derivative of N of order <= 3 that is nonzero on the box
  // bounds the vanishing order of N below that of D, so R is unbounded near the point.
  std::vector<std::vector<Poly2>> derivatives{{r.numerator}};
  for (int order = 1; order <= 3; ++order) {
    std::vector<Poly2> next;
    for (std::size_t k = 0; k < derivatives.back().size(); ++k) {
      if (k == 0) next.push_back(partial_derivative(derivatives.back()[0], 0));
      next.push_back(partial_derivative(derivatives.back()[k], 1));
    }
    derivatives.push_back(std::move(next));
  }
  SingularLocusReport rep;
  rep.subsystems.push_back(real_solutions_2x2(m.x_block.A, m.x_block.B, opts));
  rep.subsystems.push_back(real_solutions_2x2(m.y_block.A, m.y_block.B, opts));
  for (std::size_t k = 0; k < rep.subsystems.size(); ++k) {
    for (const auto& pt : rep.subsystems[k].points) {
      auto same = std::find_if(rep.points.begin(), rep.points.end(),
                               [&](const DivergencePoint& d) { return d.location.overlaps(pt); });
      if (same != rep.points.end()) {
        same->subsystems.push_back(k);
        continue;
      }
      DivergencePoint dp;
      dp.location = pt;
      dp.numerator_range = enclose(r.numerator, pt);
      dp.denominator_range = enclose(r.denominator, pt);
      for (std::size_t order = 0; order < derivatives.size() && !dp.numerator_order; ++order)
        for (const auto& d : derivatives[order])
          if (!contains_zero(enclose(d, pt))) {
            dp.numerator_order = static_cast<int>(order);
            break;
          }
      dp.status = pt.verified && dp.numerator_order ? DivergenceStatus::certified : DivergenceStatus::indeterminate;
      dp.subsystems.push_back(k);
      rep.points.push_back(std::move(dp));
    }
  }
  return rep;
}

EquilibriumSearch find_equilibria(const PlanarSystem& sys, const SolveOptions& opts) {
  const SubsystemReport rep = real_solutions_2x2(sys.P, sys.Q, opts);
  EquilibriumSearch out;
  out.zero_dimensional = rep.status != SolutionStatus::degenerate_branch;
  for (const auto& pt : rep.points) {
    if (pt.exact())
      out.exact.emplace_back(pt.x.lo, pt.y.lo);
    else
      out.approximate.push_back(pt);
  }
  return out;
}

AssertionReport assertion_AB_report(const PlanarSystem& sys, const std::vector<std::pair<Rational, Rational>>& equilibria,
                                    const SingularLocusReport& locus) {
  AssertionReport rep;
  bool any_negative = false;
  bool any_unresolved = false;
  for (const auto& [x, y] : equilibria) {
    const NeighborhoodSign s = sign_of_R_near_equilibrium(sys, x, y);
    rep.equilibrium_signs.push_back(s);
    any_negative |= s == NeighborhoodSign::negative;
    any_unresolved |= s == NeighborhoodSign::not_continuous || s == NeighborhoodSign::zero_at_point;
  }
  if (equilibria.empty()) rep.notes.push_back("no equilibria supplied; the sign condition is not evaluated");

  rep.assertion_B_count = locus.certified_divergences();
  std::vector<const DivergencePoint*> certified;
  for (const auto& p : locus.points)
    if (p.status == DivergenceStatus::certified) certified.push_back(&p);
  for (const auto* p : certified) {
    const IsolatedSolution mirrored{{-p->location.x.hi, -p->location.x.lo}, {-p->location.y.hi, -p->location.y.lo}};
    if (p->location.overlaps(mirrored)) continue;  // the origin is its own mirror image
    for (const auto* q : certified)
      if (q != p && q->location.overlaps(mirrored)) {
        ++rep.symmetric_points;
        break;
      }
  }
  rep.symmetric_pairs = rep.symmetric_points / 2;
  if (locus.has_degenerate_branch()) rep.notes.push_back("singular locus has a positive-dimensional branch; count is partial");
  const std::size_t indeterminate = locus.points.size() - rep.assertion_B_count;
  if (indeterminate > 0)
    rep.notes.push_back(std::to_string(indeterminate) + " zero(s) of G where the numerator vanishes to order 4 or more");

  if (any_negative)
    rep.assertion_A = AssertionA::fails_R_negative;
  else if (any_unresolved || equilibria.empty())
    rep.assertion_A = AssertionA::fails_indeterminate;
  else if (rep.assertion_B_count == 0)
    rep.assertion_A = AssertionA::fails_no_singularity;
  else
    rep.assertion_A = AssertionA::holds;
  return rep;
}

AssertionReport assertion_AB_report(const PlanarSystem& sys,
                                    const std::vector<std::pair<Rational, Rational>>& equilibria) {
  return assertion_AB_report(sys, equilibria, singular_locus(sys));
}

}  // namespace cclab
