#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mvmnl/instance.hpp"

namespace mvmnl {

struct Solution {
  Assortment assortment;
  double value = 0.0;
};

struct Arc {
  int from = 0;
  int to = 0;
  int64_t weight = 1;
};

// Vertices 1..n; every arc has from < to.
struct WeightedDigraph {
  int n = 0;
  std::vector<Arc> edges;
};

struct BipartiteGraph {
  int left = 0;
  int right = 0;
  std::vector<std::pair<int, int>> edges;  // 1-based (i in left, j in right)
};

inline constexpr int kDefaultEnumerationBits = 24;

Solution brute_force(const Instance& inst, int max_bits = kDefaultEnumerationBits);
Solution brute_force_capacitated(const Instance& inst, int k1, int k2, int max_bits = kDefaultEnumerationBits);
Solution brute_force_general(const GeneralPriceInstance& inst, int max_bits = kDefaultEnumerationBits);

struct DicutResult {
  std::vector<int> vertices;  // sorted, 1-based
  int64_t value = 0;
};

DicutResult max_dicut_brute(const WeightedDigraph& g, int max_vertices = 24);

struct BdksResult {
  std::vector<int> left;
  std::vector<int> right;
  int edges = 0;
};

BdksResult bdks_brute(const BipartiteGraph& g, int kappa, int64_t budget = 1000000);

void validate_digraph(const WeightedDigraph& g);
void validate_bipartite(const BipartiteGraph& g);

WeightedDigraph digraph_from_json(const std::string& text);
std::string digraph_to_json(const WeightedDigraph& g);
BipartiteGraph bipartite_from_json(const std::string& text);
std::string bipartite_to_json(const BipartiteGraph& g);

}  // namespace mvmnl
