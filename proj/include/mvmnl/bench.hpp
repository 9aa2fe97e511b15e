#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mvmnl/instance.hpp"
#include "mvmnl/partition.hpp"

namespace mvmnl {

// Methods: aro, k4, k6, gapeps, rr, exact.
struct ExperimentConfig {
  std::vector<int> sizes{25};
  int replicates = 500;
  uint64_t seed = 1;
  double eps = 0.1;
  std::vector<std::string> methods{"aro", "k4", "k6", "gapeps", "rr"};
  Distribution price_dist = default_price_dist();
  Distribution weight_dist = default_weight_dist();
  uint64_t gapeps_cap = kDefaultGapEpsCap;
  int threads = 0;      // 0 = hardware concurrency
  bool timing = true;   // false writes zero times so output is byte-stable
};

void validate_config(const ExperimentConfig& cfg);

struct MethodOutcome {
  double value = 0.0;
  double alpha = 0.0;
  double seconds = 0.0;
  bool ok = false;
  bool fallback = false;  // gapeps exceeded its cap and used the K=4 candidates
  std::string error;
};

struct ResultRow {
  int size = 0;
  int replicate = 0;
  std::string instance_id;
  int n = 0;
  int m = 0;
  uint64_t seed = 0;
  double r_star = 0.0;
  bool lp_integral = false;
  bool ok = false;
  std::string error;
  std::vector<MethodOutcome> methods;  // aligned with ExperimentConfig::methods
};

struct MethodSummary {
  std::string method;
  long count = 0;  // rows averaged over
  double mean_alpha = 0.0;
  double min_alpha = 0.0;
  double mean_seconds = 0.0;
  long failures = 0;
  long fallbacks = 0;
};

struct SizeSummary {
  int size = 0;
  long rows = 0;
  long failed_rows = 0;
  long non_integral = 0;
  double non_integral_fraction = 0.0;
  std::vector<MethodSummary> methods;

  const MethodSummary* find(const std::string& method) const;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<ResultRow> rows;
  std::vector<SizeSummary> summary;
};

ExperimentResult run_experiment(const ExperimentConfig& cfg);
std::vector<SizeSummary> summarize(const ExperimentConfig& cfg, const std::vector<ResultRow>& rows);

std::string results_csv(const ExperimentConfig& cfg, const std::vector<ResultRow>& rows);
std::string summary_json(const ExperimentResult& res);
std::string summary_table(const ExperimentResult& res);

// Writes <prefix>.csv, <prefix>.summary.json and <prefix>.summary.txt.
void write_results(const ExperimentResult& res, const std::string& prefix);

// Parses a CSV written by results_csv back into rows (method names from the header).
std::vector<ResultRow> read_results_csv(const std::string& path, std::vector<std::string>* methods = nullptr);

}  // namespace mvmnl
