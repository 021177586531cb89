#include "cclab/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "cclab/poly2.hpp"
#include "cclab/unipoly.hpp"

namespace cclab {

using nlohmann::json;

const LimitCycleReport* AnalysisReport::ground_truth() const {
  if (exact_cycles) return &*exact_cycles;
  if (numeric_cycles) return &*numeric_cycles;
  return nullptr;
}

AnalysisReport analyze(const PlanarSystem& sys, const AnalysisOptions& opts) {
  AnalysisReport rep;
  rep.label = sys.label;
  rep.vars = sys.vars();
  rep.degree_P = sys.P.total_degree();
  rep.degree_Q = sys.Q.total_degree();

  const EquilibriumSearch eq = find_equilibria(sys, opts.solve);
  rep.equilibria_zero_dimensional = eq.zero_dimensional;
  if (!eq.zero_dimensional) rep.notes.push_back("equilibria form a curve; only isolated ones are listed");
  std::vector<std::pair<Rational, Rational>> exact;
  for (const auto& [x, y] : eq.exact) {
    EquilibriumEntry e{verify_equilibrium(sys, x, y), std::nullopt};
    e.sign = sign_of_R_near_equilibrium(sys, x, y);
    rep.equilibria.push_back(std::move(e));
    exact.emplace_back(x, y);
  }
  rep.irrational_equilibria = eq.approximate;
  if (!eq.approximate.empty())
    rep.notes.push_back(std::to_string(eq.approximate.size()) +
                        " irrational equilibrium(s) enclosed in boxes; assertion (A) uses rational ones only");

  rep.locus = singular_locus(sys, opts.solve);
  rep.assertion = assertion_AB_report(sys, exact, rep.locus);

  rep.radial = detect_radial_form(sys);
  if (rep.radial->matched) rep.exact_cycles = exact_radial_cycles(*rep.radial);

  if (opts.numeric_scan) {
    if (exact.empty()) {
      rep.notes.push_back("numeric scan skipped: no rational equilibrium to anchor the section");
    } else {
      const auto& [x0, y0] = exact.front();
      const PlanarSystem shifted = sgn(x0) == 0 && sgn(y0) == 0 ? sys : translate_to_origin(sys, x0, y0);
      rep.numeric_cycles = find_cycles_numeric(shifted, opts.r_lo, opts.r_hi, opts.n_scan, opts.scan);
      if (sgn(x0) != 0 || sgn(y0) != 0)
        rep.numeric_cycles->notes.push_back("section anchored at (" + to_string(x0) + ", " + to_string(y0) + ")");
    }
  }
  rep.verdict = verdict(rep);
  return rep;
}

std::string verdict(const AnalysisReport& report) {
  std::string a;
  switch (report.assertion.assertion_A) {
    case AssertionA::holds:
      a = "assertion (A) holds";
      break;
    case AssertionA::fails_R_negative:
      a = "assertion (A) fails (R < 0 near an equilibrium)";
      break;
    case AssertionA::fails_no_singularity:
      a = "assertion (A) fails (|R| has no certified divergence)";
      break;
    case AssertionA::fails_indeterminate:
      a = "assertion (A) undetermined";
      break;
  }
  const LimitCycleReport* cycles = report.ground_truth();
  if (!cycles) return a + "; no limit-cycle analysis available";
  const std::size_t n = cycles->cycle_count();
  std::string c = n == 0 ? "no limit cycle detected" : n == 1 ? "1 limit cycle detected" : std::to_string(n) + " limit cycles detected";
  if (cycles->center_flag) c += " (continuum of periodic orbits)";
  if (report.assertion.assertion_A == AssertionA::fails_indeterminate) return a + "; " + c;
  const bool predicts = report.assertion.assertion_A == AssertionA::holds;
  const bool differs = predicts != (n > 0);
  return a + "; " + c + ": " +
         (differs ? "criterion outcome differs from detected cycles" : "criterion outcome agrees with detected cycles");
}

json to_json(const CurvatureValue& v) {
  if (const auto* q = std::get_if<Rational>(&v)) return json{{"kind", "value"}, {"value", to_string(*q)}};
  if (std::holds_alternative<SingularDenominator>(v)) return json{{"kind", "singular_denominator"}};
  return json{{"kind", "indeterminate"}};
}

json to_json(const RationalInterval& iv) {
  return json{{"lo", to_string(iv.lo)}, {"hi", to_string(iv.hi)}, {"approx", iv.midpoint().get_d()}};
}

namespace {

json box_json(const IsolatedSolution& s) {
  return json{{"x", to_json(s.x)}, {"y", to_json(s.y)}, {"verified", s.verified}};
}

json strings(const std::vector<std::string>& v) { return json(v); }

}  // namespace

json to_json(const LimitCycleReport& r) {
  json cycles = json::array();
  for (const auto& c : r.cycles) {
    json j{{"radius", c.radius},
           {"period", c.period},
           {"stability", to_string(c.stability)},
           {"source", to_string(c.source)},
           {"note", c.note}};
    j["s_interval"] = c.s_interval ? to_json(*c.s_interval) : json(nullptr);
    j["radius_interval"] = c.radius_interval ? to_json(*c.radius_interval) : json(nullptr);
    cycles.push_back(std::move(j));
  }
  json out{{"cycles", cycles},
           {"cycle_count", r.cycle_count()},
           {"center_flag", r.center_flag},
           {"notes", strings(r.notes)}};
  out["annulus"] = r.annulus ? json{(*r.annulus)[0], (*r.annulus)[1]} : json(nullptr);
  return out;
}

json to_json(const SingularLocusReport& r) {
  json subs = json::array();
  for (std::size_t k = 0; k < r.subsystems.size(); ++k) {
    const auto& s = r.subsystems[k];
    json points = json::array();
    for (const auto& p : s.points) points.push_back(box_json(p));
    json elims = json::array();
    for (const auto& e : s.eliminants)
      elims.push_back(json{{"eliminated", s.f.vars()[static_cast<std::size_t>(e.eliminated)]},
                           {"polynomial", to_string(e.polynomial)},
                           {"real_roots", e.real_roots},
                           {"notes", strings(e.notes)}});
    subs.push_back(json{{"block", k == 0 ? "x" : "y"},
                        {"f", to_string(s.f)},
                        {"g", to_string(s.g)},
                        {"status", to_string(s.status)},
                        {"points", points},
                        {"eliminants", elims},
                        {"notes", strings(s.notes)}});
  }
  json points = json::array();
  for (const auto& p : r.points) {
    json j = box_json(p.location);
    j["status"] = to_string(p.status);
    j["numerator_order"] = p.numerator_order ? json(*p.numerator_order) : json(nullptr);
    json blocks = json::array();
    for (auto b : p.subsystems) blocks.push_back(b == 0 ? "x" : "y");
    j["blocks"] = blocks;
    points.push_back(std::move(j));
  }
  return json{{"subsystems", subs},
              {"points", points},
              {"empty_certified", r.empty_certified()},
              {"degenerate_branch", r.has_degenerate_branch()},
              {"certified_divergences", r.certified_divergences()}};
}

json to_json(const AnalysisReport& r) {
  json eqs = json::array();
  for (const auto& e : r.equilibria) {
    json j{{"x", to_string(e.certificate.x)},
           {"y", to_string(e.certificate.y)},
           {"P", to_string(e.certificate.P_value)},
           {"Q", to_string(e.certificate.Q_value)},
           {"valid", e.certificate.valid()}};
    j["R"] = e.certificate.R_at_point ? to_json(*e.certificate.R_at_point) : json(nullptr);
    j["neighborhood_sign"] = e.sign ? json(to_string(*e.sign)) : json(nullptr);
    eqs.push_back(std::move(j));
  }
  json irr = json::array();
  for (const auto& b : r.irrational_equilibria) irr.push_back(box_json(b));
  json signs = json::array();
  for (auto s : r.assertion.equilibrium_signs) signs.push_back(to_string(s));
  json out{{"label", r.label},
           {"variables", json{r.vars[0], r.vars[1]}},
           {"degree", json{{"P", r.degree_P}, {"Q", r.degree_Q}}},
           {"equilibria", eqs},
           {"equilibria_zero_dimensional", r.equilibria_zero_dimensional},
           {"irrational_equilibria", irr},
           {"singular_locus", to_json(r.locus)},
           {"assertion",
            json{{"A", to_string(r.assertion.assertion_A)},
                 {"B_count", r.assertion.assertion_B_count},
                 {"symmetric_points", r.assertion.symmetric_points},
                 {"symmetric_pairs", r.assertion.symmetric_pairs},
                 {"equilibrium_signs", signs},
                 {"notes", strings(r.assertion.notes)}}},
           {"notes", strings(r.notes)},
           {"verdict", r.verdict}};
  out["radial_form"] = r.radial ? json{{"matched", r.radial->matched}, {"f", to_string(r.radial->f)}} : json(nullptr);
  json cycles;
  cycles["exact"] = r.exact_cycles ? to_json(*r.exact_cycles) : json(nullptr);
  cycles["numeric"] = r.numeric_cycles ? to_json(*r.numeric_cycles) : json(nullptr);
  out["cycles"] = cycles;
  return out;
}

namespace {

void emit(std::ostringstream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // object_t is a std::map: keys come out sorted
        if (!first) os << ",\n";
        first = false;
        os << pad << json(it.key()).dump() << ": ";
        emit(os, it.value(), indent + 2);
      }
      os << "\n" << close << "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k > 0) os << ",\n";
        os << pad;
        emit(os, j[k], indent + 2);
      }
      os << "\n" << close << "]";
      return;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        os << "null";
        return;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      os << buf;
      return;
    }
    default:
      os << j.dump();
  }
}

std::string box_text(const IsolatedSolution& s) {
  std::ostringstream os;
  os.precision(12);
  if (s.exact())
    os << "(" << to_string(s.x.lo) << ", " << to_string(s.y.lo) << ")";
  else
    os << "(" << s.x.midpoint().get_d() << ", " << s.y.midpoint().get_d() << ") +- " << s.x.width().get_d();
  return os.str();
}

}  // namespace

std::string dump_canonical(const json& j) {
  std::ostringstream os;
  emit(os, j, 0);
  os << "\n";
  return os.str();
}

std::string render_text(const LimitCycleReport& r) {
  std::ostringstream os;
  os.precision(12);
  os << "cycles: " << r.cycle_count() << (r.center_flag ? " (center: continuum of periodic orbits)" : "") << "\n";
  if (r.annulus) os << "scanned annulus on the section: [" << (*r.annulus)[0] << ", " << (*r.annulus)[1] << "]\n";
  for (const auto& c : r.cycles) {
    os << "  r = " << c.radius << "  period = " << c.period << "  " << to_string(c.stability) << "  ["
       << to_string(c.source) << "]";
    if (c.s_interval) {
      if (c.s_interval->is_point())
        os << "  r^2 = " << to_string(c.s_interval->lo);
      else
        os << "  r^2 in [" << to_string(c.s_interval->lo) << ", " << to_string(c.s_interval->hi) << "]";
    }
    if (!c.note.empty()) os << "  (" << c.note << ")";
    os << "\n";
  }
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  return os.str();
}

std::string render_text(const SingularLocusReport& r) {
  std::ostringstream os;
  for (std::size_t k = 0; k < r.subsystems.size(); ++k) {
    const auto& s = r.subsystems[k];
    os << "block " << (k == 0 ? "x" : "y") << ": {" << to_string(s.f) << " = 0, " << to_string(s.g)
       << " = 0} -> " << to_string(s.status) << "\n";
    for (const auto& e : s.eliminants)
      os << "  eliminant (" << s.f.vars()[static_cast<std::size_t>(e.eliminated)] << " removed): "
         << to_string(e.polynomial) << "  real roots: " << e.real_roots << "\n";
    for (const auto& n : s.notes) os << "  note: " << n << "\n";
  }
  os << "divergence points: " << r.certified_divergences() << " certified of " << r.points.size() << "\n";
  for (const auto& p : r.points) os << "  " << box_text(p.location) << "  " << to_string(p.status) << "\n";
  return os.str();
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "system " << (r.label.empty() ? "(unnamed)" : r.label) << "  vars " << r.vars[0] << ", " << r.vars[1]
     << "  degrees " << r.degree_P << ", " << r.degree_Q << "\n";
  os << "equilibria:\n";
  for (const auto& e : r.equilibria) {
    os << "  (" << to_string(e.certificate.x) << ", " << to_string(e.certificate.y) << ")";
    if (e.certificate.R_at_point) os << "  R = " << to_string(*e.certificate.R_at_point);
    if (e.sign) os << "  " << to_string(*e.sign);
    os << "\n";
  }
  for (const auto& b : r.irrational_equilibria) os << "  " << box_text(b) << "  (irrational)\n";
  os << "singular locus of |R|:\n" << render_text(r.locus);
  os << "assertion (A): " << to_string(r.assertion.assertion_A) << "\n";
  os << "assertion (B) count: " << r.assertion.assertion_B_count << "  symmetric pairs: " << r.assertion.symmetric_pairs
     << "\n";
  for (const auto& n : r.assertion.notes) os << "  note: " << n << "\n";
  if (r.radial && r.radial->matched) os << "radial form: r' = r f(r^2), f(s) = " << to_string(r.radial->f) << "\n";
  if (r.exact_cycles) os << "exact radial analysis\n" << render_text(*r.exact_cycles);
  if (r.numeric_cycles) os << "numeric Poincare scan\n" << render_text(*r.numeric_cycles);
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  os << "verdict: " << r.verdict << "\n";
  return os.str();
}

}  // namespace cclab
