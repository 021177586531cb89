#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cclab/curvature.hpp"
#include "cclab/dynamics.hpp"
#include "cclab/singularity.hpp"
#include "cclab/system.hpp"

namespace cclab {

struct AnalysisOptions {
  double r_lo = 0.2;
  double r_hi = 3.0;
  int n_scan = 40;
  bool numeric_scan = true;
  ScanOptions scan;
  SolveOptions solve;
};

struct EquilibriumEntry {
  EquilibriumCertificate certificate;
  std::optional<NeighborhoodSign> sign;  // empty when the metric is degenerate
};

struct AnalysisReport {
  std::string label;
  VarNames vars;
  int degree_P = 0;
  int degree_Q = 0;
  bool equilibria_zero_dimensional = true;
  std::vector<EquilibriumEntry> equilibria;
  std::vector<IsolatedSolution> irrational_equilibria;
  SingularLocusReport locus;
  AssertionReport assertion;
  std::optional<RadialForm> radial;
  std::optional<LimitCycleReport> exact_cycles;
  std::optional<LimitCycleReport> numeric_cycles;
  std::vector<std::string> notes;
  std::string verdict;

  /// Exact radial result when available, otherwise the numeric scan.
  const LimitCycleReport* ground_truth() const;
};

/// curvature -> singularity -> dynamics on one system. The numeric scan runs
/// around the first rational equilibrium, shifted to the origin.
AnalysisReport analyze(const PlanarSystem& sys, const AnalysisOptions& opts = {});

/// Neutral comparison of the assertion (A) outcome with the detected cycles.
std::string verdict(const AnalysisReport& report);

nlohmann::json to_json(const CurvatureValue& v);
nlohmann::json to_json(const RationalInterval& iv);
nlohmann::json to_json(const LimitCycleReport& r);
nlohmann::json to_json(const SingularLocusReport& r);
nlohmann::json to_json(const AnalysisReport& r);

/// Deterministic rendering: keys sorted, floats with 17 significant digits,
/// non-finite floats as null, two-space indentation.
std::string dump_canonical(const nlohmann::json& j);

std::string render_text(const LimitCycleReport& r);
std::string render_text(const SingularLocusReport& r);
std::string render_text(const AnalysisReport& r);

}  // namespace cclab
