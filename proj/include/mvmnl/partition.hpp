#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mvmnl/instance.hpp"
#include "mvmnl/lp.hpp"

namespace mvmnl {

struct ThresholdSet {
  int K = 0;
  std::vector<double> b;  // b[k-1] = b_k, k = 1..K

  // b_k for k in 1..K; b_0 = 1 by convention.
  double at(int k) const { return k == 0 ? 1.0 : b[k - 1]; }
};

std::vector<std::string> threshold_violations(const ThresholdSet& t, double tol = 1e-9);

struct BlockPartition {
  int K = 0;
  int n = 0;
  int m = 0;
  double r_star = 0.0;
  ThresholdSet thresholds;
  std::vector<int> N1, N2, M1, M2;  // N1 and M1 contain 0
  std::vector<int> ci, cj;          // cutoffs i_k, j_k at index k (slot 0 = 0)
  std::vector<int> band_x;          // I(i) for i in N2, 0 otherwise
  std::vector<int> band_y;
  std::vector<std::pair<int, int>> S00;
  // S[I][J] for I, J in 1..K (slot 0 unused).
  std::vector<std::vector<std::vector<std::pair<int, int>>>> S;
  double U00 = 0.0, R00 = 0.0;
  std::vector<std::vector<double>> U, R, Up, Rp;

  const std::vector<std::pair<int, int>>& block(int I, int J) const { return S[I][J]; }
};

BlockPartition partition_blocks(const Instance& inst, const ScaledLpSolution& sol, const ThresholdSet& t);

std::vector<Assortment> candidate_assortments(const BlockPartition& part);

// Lemma-style aggregate bounds on the primed blocks; returns human-readable violations.
std::vector<std::string> block_bound_violations(const BlockPartition& part, double rel_tol = 1e-9);

// Bundles with nonzero LP value that no candidate covers.
std::vector<std::pair<int, int>> uncovered_bundles(const BlockPartition& part, const ScaledLpSolution& sol);

struct RoundResult {
  Assortment assortment;
  double value = 0.0;
  int k = 0;  // winning candidate, 0 when the LP solution was integral
};

RoundResult round_best(const Instance& inst, const ScaledLpSolution& sol, const ThresholdSet& t);

struct DualCertificate {
  int K = 0;
  double beta_prime = 0.0;
  ThresholdSet b;
  std::vector<double> v;  // v[k-1] = v_k
};

struct CertificateReport {
  bool pass = false;
  std::vector<std::string> violations;
  double certified_ratio = 0.0;
  double min_slack = 0.0;
};

CertificateReport check_certificate(const DualCertificate& c, double tol = 1e-9);
double threshold_ratio(const ThresholdSet& t);

DualCertificate preset_certificate(int K);
ThresholdSet preset_thresholds(int K);

std::string certificate_to_json(const DualCertificate& c);
DualCertificate certificate_from_json(const std::string& text);
DualCertificate read_certificate(const std::string& path);
void write_certificate(const DualCertificate& c, const std::string& path);

struct SearchResult {
  DualCertificate cert;
  double ratio = 0.0;
  long grid_points = 0;
};

SearchResult grid_search_thresholds(int K, double step);

// Ratio max_k (U00 R00 + sum U'R') / (U00 + sum U') over the k-th rectangle,
// prices normalized by r*. Up/Rp indexed [I][J] with I, J in 1..K.
double sample_ratio(const ThresholdSet& t, double U00, double R00, const std::vector<std::vector<double>>& Up,
                    const std::vector<std::vector<double>>& Rp);

double beta_upper_sample(const ThresholdSet& t, long samples, uint64_t seed);

struct GapEpsResult {
  Assortment assortment;
  double value = 0.0;
  int bits = 0;
  uint64_t evaluated = 0;
  int rule_conflicts = 0;  // forced-in products that carry a zero LP label
};

inline constexpr uint64_t kDefaultGapEpsCap = uint64_t{1} << 22;

GapEpsResult gap_eps_solve(const Instance& inst, const ScaledLpSolution& sol, double eps,
                           uint64_t cap = kDefaultGapEpsCap);

}  // namespace mvmnl
