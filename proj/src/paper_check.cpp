#include "cclab/paper_check.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>

#include "cclab/catalogue.hpp"
#include "cclab/curvature.hpp"
#include "cclab/errors.hpp"
#include "cclab/hilbert.hpp"
#include "cclab/report.hpp"
#include "cclab/roots.hpp"
#include "cclab/singularity.hpp"
#include "cclab/unipoly.hpp"

namespace cclab {

namespace {

struct Outcome {
  bool passed = false;
  std::string observed;
};

class Runner {
 public:
  void check(const std::string& id, const std::string& expected, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckRow row{id, expected, "", false, 0.0};
    try {
      const Outcome o = body();
      row.passed = o.passed;
      row.observed = o.observed;
    } catch (const std::exception& e) {
      row.observed = std::string("error: ") + e.what();
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rows.push_back(std::move(row));
  }
  std::vector<CheckRow> rows;
};

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::vector<Rational> rationals(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& w : words(s)) out.push_back(parse_rational(w));
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& w : v) out += (out.empty() ? "" : " ") + w;
  return out;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

const std::string* fact(const CatalogueEntry& e, const std::string& name) {
  const Fact* f = e.fact(name);
  return f ? &f->value : nullptr;
}

void check_system(Runner& run, const CatalogueEntry& entry, const std::map<std::string, Poly2>& fixtures,
                  const Catalogue& catalogue, const PaperCheckOptions& opts) {
  const std::string& k = entry.key;
  const PlanarSystem sys = parse_system(entry.source);
  const RationalFunction R = scalar_curvature(sys);

  if (const auto* v = fact(entry, "equilibrium")) {
    run.check(k + ".equilibrium", *v, [&] {
      const auto xy = rationals(*v);
      if (xy.size() != 2) throw InputError("paper_check", "equilibrium fact needs two coordinates");
      const EquilibriumCertificate c = verify_equilibrium(sys, xy[0], xy[1]);
      return Outcome{c.valid(), "P = " + to_string(c.P_value) + ", Q = " + to_string(c.Q_value)};
    });
    if (const auto* r = fact(entry, "R_at_equilibrium")) {
      run.check(k + ".R_at_equilibrium", *r, [&] {
        const auto xy = rationals(*v);
        const CurvatureValue got = evaluate_R(R, xy[0], xy[1]);
        const auto* q = std::get_if<Rational>(&got);
        return Outcome{q && *q == parse_rational(*r), to_string(got)};
      });
    }
    if (const auto* s = fact(entry, "neighborhood_sign")) {
      run.check(k + ".neighborhood_sign", *s, [&] {
        const auto xy = rationals(*v);
        const std::string got = to_string(sign_of_R_near_equilibrium(sys, xy[0], xy[1]));
        return Outcome{got.rfind(*s, 0) == 0, got};
      });
    }
  }

  const auto r1 = fixtures.find(k + ".R1");
  const auto r2 = fixtures.find(k + ".R2");
  if (r1 != fixtures.end() && r2 != fixtures.end()) {
    run.check(k + ".cross_multiplication", "N * R2 == R1 * 2G^2", [&] {
      const bool eq = rational_equal(R, RationalFunction{r1->second, r2->second});
      return Outcome{eq, eq ? "identity holds" : "identity fails"};
    });
  }

  run.check(k + ".finite_difference", std::to_string(opts.random_points) + " points within relative " + fmt(opts.relative_tolerance),
            [&] {
              std::mt19937_64 rng(opts.seed);
              std::uniform_int_distribution<int> coord(-128, 128);
              int done = 0;
              double worst = 0.0;
              for (int attempts = 0; done < opts.random_points && attempts < 100 * opts.random_points; ++attempts) {
                const Rational a(coord(rng), 64);
                const Rational b(coord(rng), 64);
                const CurvatureValue v = evaluate_R(R, a, b);
                const auto* q = std::get_if<Rational>(&v);
                if (!q || sgn(*q) == 0) continue;
                const double exact = q->get_d();
                const double numeric = numeric_R_check(sys, a.get_d(), b.get_d());
                worst = std::max(worst, std::abs(numeric - exact) / std::abs(exact));
                ++done;
              }
              return Outcome{done == opts.random_points && worst <= opts.relative_tolerance,
                             std::to_string(done) + " points, worst relative " + fmt(worst)};
            });

  AnalysisReport report;
  run.check(k + ".analysis", "analysis completes", [&] {
    report = analyze(sys);
    return Outcome{true, report.verdict};
  });

  if (const auto* v = fact(entry, "singular_points")) {
    run.check(k + ".singular_points", *v, [&] {
      const SingularLocusReport& locus = report.locus;
      std::vector<std::string> got;
      for (const auto& p : locus.points)
        got.push_back(p.location.exact() ? to_string(p.location.x.lo) + " " + to_string(p.location.y.lo)
                                         : "box");
      if (*v == "none")
        return Outcome{locus.empty_certified() && locus.points.empty(), got.empty() ? "none" : join(got)};
      const auto xy = rationals(*v);
      bool ok = !locus.has_degenerate_branch() && locus.points.size() * 2 == xy.size();
      for (std::size_t i = 0; ok && i < locus.points.size(); ++i) {
        const auto& p = locus.points[i];
        ok = p.status == DivergenceStatus::certified && p.location.x.contains(xy[2 * i]) &&
             p.location.y.contains(xy[2 * i + 1]);
      }
      return Outcome{ok, got.empty() ? "none" : join(got)};
    });
  }
  if (const auto* v = fact(entry, "singular_points_count")) {
    run.check(k + ".singular_points_count", *v, [&] {
      const std::size_t n = report.locus.certified_divergences();
      return Outcome{std::to_string(n) == *v && n == report.locus.points.size(), std::to_string(n)};
    });
  }

  const auto* count = fact(entry, "cycle_count");
  const auto* radii_sq = fact(entry, "cycle_radii_sq");
  const auto* stability = fact(entry, "cycle_stability");
  if (count && report.exact_cycles) {
    run.check(k + ".cycles_exact", *count + " | " + (radii_sq ? *radii_sq : "") + " | " + (stability ? *stability : ""),
              [&] {
                const auto& cyc = report.exact_cycles->cycles;
                std::vector<std::string> rs;
                std::vector<std::string> st;
                for (const auto& c : cyc) {
                  rs.push_back(c.s_interval && c.s_interval->is_point() ? to_string(c.s_interval->lo) : "irrational");
                  st.push_back(to_string(c.stability));
                }
                bool ok = std::to_string(cyc.size()) == *count;
                if (radii_sq) ok = ok && join(rs) == join(words(*radii_sq));
                if (stability) ok = ok && join(st) == join(words(*stability));
                return Outcome{ok, std::to_string(cyc.size()) + " | " + join(rs) + " | " + join(st)};
              });
  }
  if (count && report.numeric_cycles) {
    run.check(k + ".cycles_numeric", *count + " | " + (radii_sq ? *radii_sq : "") + " | " + (stability ? *stability : ""),
              [&] {
                const auto& cyc = report.numeric_cycles->cycles;
                std::vector<std::string> rs;
                std::vector<std::string> st;
                for (const auto& c : cyc) {
                  rs.push_back(fmt(c.radius));
                  st.push_back(to_string(c.stability));
                }
                bool ok = std::to_string(cyc.size()) == *count;
                if (radii_sq) {
                  const auto want = rationals(*radii_sq);
                  ok = ok && want.size() == cyc.size();
                  for (std::size_t i = 0; ok && i < cyc.size(); ++i)
                    ok = std::abs(cyc[i].radius - std::sqrt(want[i].get_d())) < 1e-6 &&
                         std::abs(cyc[i].period - 2.0 * std::numbers::pi) < 1e-6;
                }
                if (stability) ok = ok && join(st) == join(words(*stability));
                return Outcome{ok, std::to_string(cyc.size()) + " | " + join(rs) + " | " + join(st)};
              });
  }
  if (const auto* v = fact(entry, "center")) {
    run.check(k + ".center_flag", *v, [&] {
      const bool flag = report.numeric_cycles && report.numeric_cycles->center_flag;
      return Outcome{(flag ? "true" : "false") == *v, flag ? "true" : "false"};
    });
  }
  if (const auto* v = fact(entry, "assertion_A")) {
    run.check(k + ".assertion_A", *v, [&] {
      const std::string got = to_string(report.assertion.assertion_A);
      return Outcome{got == *v, got};
    });
  }
  if (const auto* v = fact(entry, "assertion_B_count")) {
    run.check(k + ".assertion_B_count", *v, [&] {
      const std::string got = std::to_string(report.assertion.assertion_B_count);
      return Outcome{got == *v, got};
    });
  }
  if (const auto* src = fact(entry, "transform_source")) {
    const auto* map = fact(entry, "transform_map");
    run.check(k + ".transform", "image of " + *src + " under " + (map ? *map : "?"), [&] {
      if (!map) throw InputError("paper_check", "transform_source without transform_map");
      const auto m = rationals(*map);
      if (m.size() != 4) throw InputError("paper_check", "transform_map needs four entries");
      const PlanarSystem from = parse_system(catalogue.at(*src).source);
      const PlanarSystem img = transform(from, Matrix2{{{m[0], m[1]}, {m[2], m[3]}}}, Vector2{0, 0}, sys.vars());
      const bool ok = img.P == sys.P && img.Q == sys.Q;
      return Outcome{ok, "dot " + sys.vars()[0] + " = " + to_string(img.P) + "; dot " + sys.vars()[1] + " = " +
                             to_string(img.Q)};
    });
  }

  for (const std::string block : {"S1", "S2"}) {
    const auto f = fixtures.find(k + "." + block + ".f");
    const auto g = fixtures.find(k + "." + block + ".g");
    if (f == fixtures.end() || g == fixtures.end()) continue;
    run.check(k + "." + block + ".empty", "no common real zero", [&] {
      const SubsystemReport s = real_solutions_2x2(f->second, g->second);
      return Outcome{s.status == SolutionStatus::empty_certified, to_string(s.status)};
    });
    const auto el = fixtures.find(k + "." + block + ".eliminant");
    if (el == fixtures.end()) continue;
    run.check(k + "." + block + ".eliminant_has_no_real_root", "0 real roots", [&] {
      const Poly2& e = el->second;
      const int var = e.degree_in(0) > 0 ? 0 : 1;
      const UniPoly u = specialize(e, 1 - var, Rational(0));
      const std::size_t n = sturm_real_root_count(u).count;
      return Outcome{n == 0, std::to_string(n) + " real roots of " + to_string(u)};
    });
  }
}

void check_growth(Runner& run, const std::filesystem::path& data_dir) {
  const auto path = data_dir / "hilbert.facts";
  if (!std::filesystem::exists(path)) return;
  const auto facts = parse_facts(read_text_file(path));
  if (auto it = facts.find("contradiction_from"); it != facts.end()) {
    run.check("growth.threshold", it->second.value, [&] {
      const ThresholdResult t = contradiction_threshold();
      const unsigned b = contradiction_threshold_bisect();
      return Outcome{std::to_string(t.threshold) == it->second.value && b == t.threshold,
                     std::to_string(t.threshold) + " (bisection " + std::to_string(b) + ", verified to k = " +
                         std::to_string(t.verified_up_to) + ")"};
    });
    run.check("growth.boundary", "S(k-1) <= claimed, S(k) > claimed at k = " + it->second.value, [&] {
      const unsigned k = static_cast<unsigned>(std::stoul(it->second.value));
      const bool ok = S(k - 1) <= claimed_H_at_power(k - 1) && S(k) > claimed_H_at_power(k);
      return Outcome{ok, "S(" + std::to_string(k) + ") = " + to_string(S(k)) + ", claimed " +
                             to_string(claimed_H_at_power(k))};
    });
  }
  for (const auto& [name, f] : facts) {
    if (name.rfind("S_", 0) != 0) continue;
    run.check("growth." + name, f.value, [&, n = name, v = f.value] {
      const BigInt got = S(static_cast<unsigned>(std::stoul(n.substr(2))));
      return Outcome{to_string(got) == v, to_string(got)};
    });
  }
  run.check("growth.closed_form_identity", "claimed_H(2^k - 1) = 4(2^k - 2)(2^(k+1) - 5), k = 2..64", [] {
    for (unsigned k = 2; k <= 64; ++k)
      if (claimed_H((BigInt(1) << k) - 1) != claimed_H_at_power(k)) return Outcome{false, "fails at k = " + std::to_string(k)};
    return Outcome{true, "holds"};
  });
}

}  // namespace

std::vector<CheckRow> run_paper_check(const PaperCheckOptions& opts) {
  Runner run;
  const Catalogue catalogue = Catalogue::load(opts.data_dir);
  const auto fixtures = load_fixtures(opts.data_dir / "fixtures" / "curvature.fix");
  for (const auto& key : catalogue.keys()) check_system(run, catalogue.at(key), fixtures, catalogue, opts);
  check_growth(run, opts.data_dir);
  return run.rows;
}

bool all_passed(const std::vector<CheckRow>& rows) {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.passed; });
}

nlohmann::json to_json(const std::vector<CheckRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows)
    arr.push_back({{"id", r.id},
                   {"expected", r.expected},
                   {"observed", r.observed},
                   {"status", r.passed ? "PASS" : "FAIL"},
                   {"seconds", r.seconds}});
  return nlohmann::json{{"checks", arr}, {"all_passed", all_passed(rows)}};
}

std::string render_text(const std::vector<CheckRow>& rows) {
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.id.size());
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& r : rows) {
    failed += r.passed ? 0 : 1;
    os << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << r.id << "  "
       << r.observed;
    if (!r.passed) os << "  (expected " << r.expected << ")";
    os << "\n";
  }
  os << rows.size() - failed << "/" << rows.size() << " checks passed\n";
  return os.str();
}

}  // namespace cclab
