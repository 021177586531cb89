#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace cclab {

struct CheckRow {
  std::string id;
  std::string expected;
  std::string observed;
  bool passed = false;
  double seconds = 0.0;
};

struct PaperCheckOptions {
  std::filesystem::path data_dir;
  int random_points = 100;  // per system, for the finite-difference comparison
  double relative_tolerance = 1e-5;
  std::uint64_t seed = 20240229;
};

/// Every recorded fact under `data_dir` (catalogue facts, curvature fixtures,
/// growth facts) recomputed and compared. Rows come out in a fixed order.
std::vector<CheckRow> run_paper_check(const PaperCheckOptions& opts);

bool all_passed(const std::vector<CheckRow>& rows);
nlohmann::json to_json(const std::vector<CheckRow>& rows);
std::string render_text(const std::vector<CheckRow>& rows);

}  // namespace cclab
