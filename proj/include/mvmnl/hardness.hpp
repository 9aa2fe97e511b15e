#pragma once

#include <string>

#include "mvmnl/exact.hpp"
#include "mvmnl/instance.hpp"

namespace mvmnl {

struct ReductionRecord {
  std::string name;
  std::string source;  // JSON description of the source graph and parameters
  Instance instance;   // normalized (prices nonincreasing)
  SortPermutation perm;
  double threshold = 0.0;  // scaled decision threshold, 0 when not applicable
  int64_t scale = 1;

  std::string to_json() const;  // sidecar; the instance itself is written separately
};

struct DicutReduction {
  RawInstance raw;  // labels as constructed: p_i = t - 0.5 - i, q_j = j
  Instance instance;
  SortPermutation perm;
  WeightedDigraph scaled_graph;
  int64_t scale = 1;
  int64_t t_scaled = 0;
};

DicutReduction reduce_max_dicut(const WeightedDigraph& g, int64_t t);
ReductionRecord dicut_record(const WeightedDigraph& g, int64_t t);

Instance gap_instance(double M);
Instance aro_worstcase(double M);

Instance reduce_bdks_capacitated(const BipartiteGraph& g, int kappa);
GeneralPriceInstance reduce_bdks_generalprice(const BipartiteGraph& g, int kappa);

}  // namespace mvmnl
