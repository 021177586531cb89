// Command-line front end: curvature, singular locus, limit cycles and the
// growth comparison for planar polynomial vector fields.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cclab/catalogue.hpp"
#include "cclab/curvature.hpp"
#include "cclab/dynamics.hpp"
#include "cclab/errors.hpp"
#include "cclab/hilbert.hpp"
#include "cclab/paper_check.hpp"
#include "cclab/parser.hpp"
#include "cclab/report.hpp"
#include "cclab/singularity.hpp"
#include "cclab/system.hpp"

namespace {

using namespace cclab;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kAnalysisFailure = 1;
constexpr int kInputError = 2;

struct Common {
  std::string data_dir;
  std::string input;
  bool json = false;
};

Catalogue load_catalogue(const Common& c) {
  return Catalogue::load(c.data_dir.empty() ? default_data_dir() : std::filesystem::path(c.data_dir));
}

PlanarSystem load_system(const Common& c) {
  const Catalogue cat = load_catalogue(c);
  return parse_system(resolve_input(c.input, cat).source);
}

void print(const Common& c, const json& j, const std::string& text) {
  if (c.json)
    std::cout << dump_canonical(j);
  else
    std::cout << text;
}

Rational rational_arg(const std::string& s) { return parse_rational(s); }

int cmd_analyze(const Common& c, const std::vector<double>& range, int scan) {
  AnalysisOptions opts;
  if (range.size() == 2) {
    opts.r_lo = range[0];
    opts.r_hi = range[1];
  }
  opts.n_scan = scan;
  const AnalysisReport rep = analyze(load_system(c), opts);
  print(c, to_json(rep), render_text(rep));
  return kOk;
}

int cmd_curvature(const Common& c, const std::vector<std::string>& at) {
  const PlanarSystem sys = load_system(c);
  const MetricComponents m = metric_components(sys);
  const RationalFunction r = scalar_curvature(m);
  json j{{"G11", to_string(m.G11)},
         {"G22", to_string(m.G22)},
         {"numerator", to_string(r.numerator)},
         {"denominator", to_string(r.denominator)}};
  std::string text = "G11 = " + to_string(m.G11) + "\nG22 = " + to_string(m.G22) + "\nR = N / D with\nN = " +
                     to_string(r.numerator) + "\nD = " + to_string(r.denominator) + "\n";
  if (at.size() == 2) {
    const Rational a = rational_arg(at[0]);
    const Rational b = rational_arg(at[1]);
    const CurvatureValue v = evaluate_R(r, a, b);
    j["at"] = json{{"point", json{to_string(a), to_string(b)}}, {"R", to_json(v)}};
    text += "R(" + to_string(a) + ", " + to_string(b) + ") = " + to_string(v) + "\n";
  }
  print(c, j, text);
  return kOk;
}

int cmd_singularities(const Common& c) {
  const SingularLocusReport rep = singular_locus(load_system(c));
  print(c, to_json(rep), render_text(rep));
  return kOk;
}

int cmd_cycles(const Common& c, const std::vector<double>& range, int scan, bool descending) {
  const PlanarSystem sys = load_system(c);
  json j;
  std::string text;
  const RadialForm form = detect_radial_form(sys);
  if (form.matched) {
    const LimitCycleReport exact = exact_radial_cycles(form);
    j["exact"] = to_json(exact);
    text += "exact radial analysis, f(s) = " + to_string(form.f) + "\n" + render_text(exact);
  } else {
    j["exact"] = nullptr;
  }
  ScanOptions opts;
  opts.descending = descending;
  const double lo = range.size() == 2 ? range[0] : 0.2;
  const double hi = range.size() == 2 ? range[1] : 3.0;
  const LimitCycleReport numeric = find_cycles_numeric(sys, lo, hi, scan, opts);
  j["numeric"] = to_json(numeric);
  text += "numeric Poincare scan\n" + render_text(numeric);
  print(c, j, text);
  return kOk;
}

int cmd_transform(const Common& c, const std::vector<std::string>& map, const std::vector<std::string>& offset,
                  const std::vector<std::string>& vars) {
  const PlanarSystem sys = load_system(c);
  const Matrix2 m{{{rational_arg(map[0]), rational_arg(map[1])}, {rational_arg(map[2]), rational_arg(map[3])}}};
  const Vector2 o = offset.size() == 2 ? Vector2{rational_arg(offset[0]), rational_arg(offset[1])} : Vector2{0, 0};
  const VarNames names = vars.size() == 2 ? VarNames{vars[0], vars[1]} : VarNames{"u", "v"};
  const PlanarSystem out = transform(sys, m, o, names);
  SystemSource src = to_source(out);
  src.label.reset();
  json j{{"variables", json{names[0], names[1]}}, {"dx", to_string(out.P)}, {"dy", to_string(out.Q)}};
  print(c, j, to_system_file(src));
  return kOk;
}

int cmd_hilbert(const Common& c, bool threshold, std::optional<unsigned> table, const std::vector<std::string>& abc) {
  const int chosen = (threshold ? 1 : 0) + (table ? 1 : 0) + (abc.empty() ? 0 : 1);
  if (chosen != 1) throw InputError("cli", "hilbert needs exactly one of --threshold, --table, --crossover");
  if (threshold) {
    const ThresholdResult t = contradiction_threshold();
    const unsigned b = contradiction_threshold_bisect();
    json j{{"threshold", t.threshold}, {"verified_up_to", t.verified_up_to}, {"bisection", b}};
    print(c, j,
          "minimal k with S(k) > H(2^k - 1): " + std::to_string(t.threshold) + "\nverified for every k up to " +
              std::to_string(t.verified_up_to) + "; bisection agrees: " + (b == t.threshold ? "yes" : "no") + "\n");
    return b == t.threshold ? kOk : kAnalysisFailure;
  }
  if (table) {
    if (*table < 2) throw InputError("cli", "--table needs K >= 2");
    json rows = json::array();
    std::string text = "k  2^k-1  S_k  claimed  contradiction\n";
    for (const auto& g : comparison_table(*table)) {
      rows.push_back(json{{"k", g.k},
                          {"degree", to_string(g.degree)},
                          {"S_k", to_string(g.S_k)},
                          {"claimed", to_string(g.claimed)},
                          {"contradiction", g.contradiction}});
      text += std::to_string(g.k) + "  " + to_string(g.degree) + "  " + to_string(g.S_k) + "  " + to_string(g.claimed) +
              "  " + (g.contradiction ? "yes" : "no") + "\n";
    }
    print(c, json{{"rows", rows}}, text);
    return kOk;
  }
  const Crossover x = hanli_crossover(rational_arg(abc[0]), rational_arg(abc[1]), rational_arg(abc[2]));
  json j{{"n", to_string(x.n)},
         {"precision_bits", x.precision_bits},
         {"stable", x.stable},
         {"bound_at_n", x.bound_at_n},
         {"q_at_n", x.q_at_n},
         {"bound_before", x.bound_before},
         {"q_before", x.q_before}};
  std::string text = "crossover n = " + to_string(x.n) + " (" + std::to_string(x.precision_bits) + "-bit floats; " +
                     (x.stable ? "unchanged at doubled precision" : "CHANGES at doubled precision") + ")\n" +
                     "  bound(n) = " + x.bound_at_n + " > q(n) = " + x.q_at_n + "\n";
  if (!x.bound_before.empty()) text += "  bound(n-1) = " + x.bound_before + " <= q(n-1) = " + x.q_before + "\n";
  print(c, j, text);
  return x.stable ? kOk : kAnalysisFailure;
}

int cmd_paper_check(const Common& c) {
  PaperCheckOptions opts;
  opts.data_dir = c.data_dir.empty() ? default_data_dir() : std::filesystem::path(c.data_dir);
  const auto rows = run_paper_check(opts);
  print(c, to_json(rows), render_text(rows));
  return all_passed(rows) ? kOk : kAnalysisFailure;
}

int cmd_trajectory(const Common& c, const std::vector<double>& from, double t_end, const std::string& out_path) {
  const PlanarSystem sys = load_system(c);
  const Trajectory traj = integrate(sys, {from[0], from[1]}, t_end);
  const std::map<std::string, std::string> meta{{"system", sys.label.empty() ? c.input : sys.label},
                                                {"dx", to_string(sys.P)},
                                                {"dy", to_string(sys.Q)},
                                                {"start", std::to_string(from[0]) + " " + std::to_string(from[1])}};
  if (out_path.empty() || out_path == "-") {
    write_trajectory_csv(std::cout, traj, meta);
  } else {
    std::ofstream out(out_path);
    if (!out) throw InputError("cli", "cannot write " + out_path);
    write_trajectory_csv(out, traj, meta);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curvature, singular locus and limit cycles of planar polynomial vector fields"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--data-dir", common.data_dir, "Directory holding catalogue/ and fixtures/");

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", common.input, "Catalogue key (s1, s1a, s2, center) or path to a system file")->required();
    sub->add_flag("--json", common.json, "Emit JSON");
  };

  std::vector<double> range;
  int scan = 40;
  auto* analyze_cmd = app.add_subcommand("analyze", "Full report: curvature, singular locus, assertions, cycles");
  add_input(analyze_cmd);
  analyze_cmd->add_option("--r-range", range, "Scan range on the section")->expected(2);
  analyze_cmd->add_option("--scan", scan, "Number of grid points")->check(CLI::Range(2, 100000));

  std::vector<std::string> at;
  auto* curvature_cmd = app.add_subcommand("curvature", "Metric components and R = N / D");
  add_input(curvature_cmd);
  curvature_cmd->add_option("--at", at, "Evaluate R exactly at a rational point")->expected(2);

  auto* sing_cmd = app.add_subcommand("singularities", "Real zeros of G and divergence points of |R|");
  add_input(sing_cmd);

  bool descending = false;
  auto* cycles_cmd = app.add_subcommand("cycles", "Exact radial analysis and numeric Poincare scan");
  add_input(cycles_cmd);
  cycles_cmd->add_option("--r-range", range, "Scan range on the section")->expected(2);
  cycles_cmd->add_option("--scan", scan, "Number of grid points")->check(CLI::Range(2, 100000));
  cycles_cmd->add_flag("--descending", descending, "Scan from the outer radius inwards");

  std::vector<std::string> map;
  std::vector<std::string> offset;
  std::vector<std::string> vars;
  auto* transform_cmd = app.add_subcommand("transform", "Linear change of variables (x, y) = M (u, v) + offset");
  add_input(transform_cmd);
  transform_cmd->add_option("--map", map, "Matrix entries a b c d (row major)")->expected(4)->required();
  transform_cmd->add_option("--offset", offset, "Offset e f")->expected(2);
  transform_cmd->add_option("--vars", vars, "New variable names (default u v)")->expected(2);

  bool threshold = false;
  std::optional<unsigned> table;
  std::vector<std::string> abc;
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Growth comparison of S_k against the claimed H(n)");
  hilbert_cmd->add_flag("--threshold", threshold, "Minimal k with S(k) > H(2^k - 1)");
  hilbert_cmd->add_option("--table", table, "Comparison table for k = 2..K");
  hilbert_cmd->add_option("--crossover", abc, "Crossover against q(n) = A n^2 + B n + C")->expected(3);
  hilbert_cmd->add_flag("--json", common.json, "Emit JSON");

  auto* check_cmd = app.add_subcommand("paper-check", "Recompute every recorded fact and report PASS/FAIL");
  check_cmd->add_flag("--json", common.json, "Emit JSON");

  std::vector<double> from;
  double t_end = 10.0;
  std::string out_path;
  auto* traj_cmd = app.add_subcommand("trajectory", "Integrate one trajectory and write CSV (t,x,y)");
  traj_cmd->add_option("input", common.input, "Catalogue key or path to a system file")->required();
  traj_cmd->add_option("--from", from, "Initial point")->expected(2)->required();
  traj_cmd->add_option("--t-end", t_end, "Final time")->check(CLI::PositiveNumber);
  traj_cmd->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(common, range, scan);
    if (*curvature_cmd) return cmd_curvature(common, at);
    if (*sing_cmd) return cmd_singularities(common);
    if (*cycles_cmd) return cmd_cycles(common, range, scan, descending);
    if (*transform_cmd) return cmd_transform(common, map, offset, vars);
    if (*hilbert_cmd) return cmd_hilbert(common, threshold, table, abc);
    if (*check_cmd) return cmd_paper_check(common);
    if (*traj_cmd) return cmd_trajectory(common, from, t_end, out_path);
  } catch (const ParseError& e) {
    std::cerr << "cclab: parse error";
    if (!e.component().empty()) std::cerr << " in " << e.component();
    std::cerr << " at byte " << e.diagnostic().byte_offset << ": " << e.diagnostic().message << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "cclab: input error [" << e.module() << "]: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "cclab: " << e.module() << " failed: " << e.what() << "\n";
    return kAnalysisFailure;
  } catch (const std::exception& e) {
    std::cerr << "cclab: " << e.what() << "\n";
    return kAnalysisFailure;
  }
  return kInputError;
}
