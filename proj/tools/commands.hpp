#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "rep2d/families.hpp"
#include "rep2d/grid.hpp"

namespace rep2d::cli {

// Exit codes: 0 pass, 1 verification failure, 2 usage error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

enum class Measure { Auto, On, Off };

struct CountOptions {
  std::string what = "all";  // tandems | quartics | runs | all
  bool oracle = false;
  long long oracle_cap = 40 * 40;
  std::string family_label;
};

/// Counts repetitions of the requested kinds; fixed JSON schema:
/// family, dims, tandems_h, tandems_v, quartics, runs, elapsed_ms.
nlohmann::json count_grid(const Grid2D& g, const CountOptions& options);

struct VerifyOptions {
  bool oracle = false;
  long long oracle_cap = 40 * 40;
  Measure measure = Measure::Auto;
  long long max_cells = families::kDefaultMaxCells;
};

struct VerifyResult {
  nlohmann::json report;
  bool pass = false;
};

/// Generates the family and its witnesses, verifies every witness with the
/// repetition predicates, checks cardinalities against the predicted counts
/// and optionally measures full detector counts.
VerifyResult verify_family(families::FamilyKind kind, int level, const VerifyOptions& options);

struct ReportOptions {
  int level_lo = 1;
  int level_hi = 6;
  std::optional<int> measure_max;  // default: per-family cap
  long long oracle_cap = 40 * 40;
  long long max_cells = families::kDefaultMaxCells;
};

/// CSV with columns level,n,predicted,measured,ratio. The ratio normalizes
/// the prediction by n^3 for tandems and by n^2 log2 n otherwise.
std::string report_csv(families::FamilyKind kind, const ReportOptions& options);

int default_measure_level(families::FamilyKind kind);

int run_cli(int argc, const char* const* argv);

}  // namespace rep2d::cli
