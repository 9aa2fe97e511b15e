#include "mvmnl/exact.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "enumerate.hpp"
#include "json.hpp"

namespace mvmnl {

using json = nlohmann::json;

namespace {

void check_budget(int n, int m, int max_bits) {
  if (n + m > max_bits)
    throw Error(ErrorCode::BudgetExceeded, "enumeration needs " + std::to_string(n + m) + " bits, budget is " +
                                               std::to_string(max_bits));
}

template <class Price>
detail::GroupProblem singleton_problem(int n, int m, const Matrix& u, Price price) {
  auto gp = detail::make_group_problem(n, m);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= m; ++j) {
      gp.W(i, j) = u(i, j);
      gp.V(i, j) = u(i, j) * price(i, j);
    }
  return gp;
}

Assortment choice_to_assortment(const detail::GroupChoice& c) {
  Assortment a;
  a.x = c.row_on;
  a.y = c.col_on;
  return a;
}

}  // namespace

Solution brute_force(const Instance& inst, int max_bits) {
  check_budget(inst.n, inst.m, max_bits);
  auto gp = singleton_problem(inst.n, inst.m, inst.u, [&](int i, int j) { return inst.p[i] + inst.q[j]; });
  Solution s;
  s.assortment = choice_to_assortment(detail::enumerate_groups(gp));
  s.value = revenue(inst, s.assortment);
  return s;
}

Solution brute_force_capacitated(const Instance& inst, int k1, int k2, int max_bits) {
  if (k1 < 0 || k2 < 0) throw Error(ErrorCode::InvalidArgument, "capacities must be nonnegative");
  check_budget(inst.n, inst.m, max_bits);
  auto gp = singleton_problem(inst.n, inst.m, inst.u, [&](int i, int j) { return inst.p[i] + inst.q[j]; });
  gp.row_cap = k1;
  gp.col_cap = k2;
  Solution s;
  s.assortment = choice_to_assortment(detail::enumerate_groups(gp));
  s.value = revenue(inst, s.assortment);
  return s;
}

Solution brute_force_general(const GeneralPriceInstance& inst, int max_bits) {
  check_budget(inst.n, inst.m, max_bits);
  auto gp = singleton_problem(inst.n, inst.m, inst.u, [&](int i, int j) { return inst.r(i, j); });
  Solution s;
  s.assortment = choice_to_assortment(detail::enumerate_groups(gp));
  s.value = revenue_general(inst, s.assortment);
  return s;
}

void validate_digraph(const WeightedDigraph& g) {
  if (g.n < 0) throw Error(ErrorCode::InvalidArgument, "vertex count must be nonnegative");
  std::set<std::pair<int, int>> seen;
  for (const Arc& e : g.edges) {
    if (e.from < 1 || e.to > g.n || e.from >= e.to)
      throw Error(ErrorCode::InvalidArgument, "edge (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                                                  ") must satisfy 1 <= i < j <= n");
    if (e.weight < 1) throw Error(ErrorCode::InvalidArgument, "edge weights must be >= 1");
    if (!seen.insert({e.from, e.to}).second)
      throw Error(ErrorCode::InvalidArgument, "duplicate edge (" + std::to_string(e.from) + "," +
                                                  std::to_string(e.to) + ")");
  }
}

void validate_bipartite(const BipartiteGraph& g) {
  if (g.left < 0 || g.right < 0) throw Error(ErrorCode::InvalidArgument, "side sizes must be nonnegative");
  std::set<std::pair<int, int>> seen;
  for (auto [i, j] : g.edges) {
    if (i < 1 || i > g.left || j < 1 || j > g.right)
      throw Error(ErrorCode::InvalidArgument, "edge (" + std::to_string(i) + "," + std::to_string(j) +
                                                  ") references a missing vertex");
    if (!seen.insert({i, j}).second)
      throw Error(ErrorCode::InvalidArgument, "duplicate edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
}

DicutResult max_dicut_brute(const WeightedDigraph& g, int max_vertices) {
  validate_digraph(g);
  if (g.n > max_vertices)
    throw Error(ErrorCode::BudgetExceeded, "max-dicut enumeration limited to " + std::to_string(max_vertices) +
                                               " vertices");
  const int n = g.n;
  std::vector<std::vector<std::pair<int, int64_t>>> out(n + 1), in(n + 1);
  for (const Arc& e : g.edges) {
    out[e.from].push_back({e.to, e.weight});
    in[e.to].push_back({e.from, e.weight});
  }
  std::vector<uint8_t> on(n + 1, 0);
  int64_t cut = 0;
  int64_t best = 0;
  uint64_t mask = 0, best_mask = 0;
  const uint64_t states = uint64_t{1} << n;
  for (uint64_t t = 1; t < states; ++t) {
    int v = std::countr_zero(t) + 1;
    int64_t delta = 0;
    for (auto [j, w] : out[v])
      if (!on[j]) delta += w;
    for (auto [i, w] : in[v])
      if (on[i]) delta -= w;
    if (on[v]) {
      on[v] = 0;
      cut -= delta;
    } else {
      on[v] = 1;
      cut += delta;
    }
    mask ^= uint64_t{1} << (n - v);
    if (cut > best || (cut == best && mask < best_mask)) {
      best = cut;
      best_mask = mask;
    }
  }
  DicutResult r;
  r.value = best;
  for (int v = 1; v <= n; ++v)
    if ((best_mask >> (n - v)) & 1) r.vertices.push_back(v);
  return r;
}

namespace {

double choose(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i + 1) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

BdksResult bdks_brute(const BipartiteGraph& g, int kappa, int64_t budget) {
  validate_bipartite(g);
  if (kappa < 0 || kappa > g.left || kappa > g.right)
    throw Error(ErrorCode::InvalidArgument, "kappa must lie in 0..min(|N|,|M|)");
  if (choose(g.left, kappa) * choose(g.right, kappa) > static_cast<double>(budget))
    throw Error(ErrorCode::BudgetExceeded, "densest-subgraph enumeration exceeds budget");
  std::vector<std::vector<uint8_t>> adj(g.left + 1, std::vector<uint8_t>(g.right + 1, 0));
  for (auto [i, j] : g.edges) adj[i][j] = 1;

  BdksResult best;
  best.edges = -1;
  std::vector<int> L(kappa);
  for (int k = 0; k < kappa; ++k) L[k] = k + 1;
  do {
    std::vector<int> colcount(g.right + 1, 0);
    for (int i : L)
      for (int j = 1; j <= g.right; ++j) colcount[j] += adj[i][j];
    std::vector<int> R(kappa);
    for (int k = 0; k < kappa; ++k) R[k] = k + 1;
    do {
      int e = 0;
      for (int j : R) e += colcount[j];
      if (e > best.edges) {
        best.edges = e;
        best.left = L;
        best.right = R;
      }
    } while (next_combination(R, g.right));
  } while (next_combination(L, g.left));
  return best;
}

WeightedDigraph digraph_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("graph JSON: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("edges")) throw Error(ErrorCode::Parse, "digraph needs \"n\" and \"edges\"");
  WeightedDigraph g;
  g.n = j["n"].get<int>();
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() < 2 || e.size() > 3)
      throw Error(ErrorCode::Parse, "digraph edges must be [i,j] or [i,j,w]");
    Arc a;
    a.from = e[0].get<int>();
    a.to = e[1].get<int>();
    a.weight = e.size() == 3 ? e[2].get<int64_t>() : 1;
    g.edges.push_back(a);
  }
  validate_digraph(g);
  return g;
}

std::string digraph_to_json(const WeightedDigraph& g) {
  json j;
  j["n"] = g.n;
  j["edges"] = json::array();
  for (const Arc& e : g.edges) j["edges"].push_back({e.from, e.to, e.weight});
  return j.dump();
}

BipartiteGraph bipartite_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("graph JSON: ") + e.what());
  }
  if (!j.contains("left") || !j.contains("right") || !j.contains("edges"))
    throw Error(ErrorCode::Parse, "bipartite graph needs \"left\", \"right\" and \"edges\"");
  BipartiteGraph g;
  g.left = j["left"].get<int>();
  g.right = j["right"].get<int>();
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::Parse, "bipartite edges must be [i,j]");
    g.edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  validate_bipartite(g);
  return g;
}

std::string bipartite_to_json(const BipartiteGraph& g) {
  json j;
  j["left"] = g.left;
  j["right"] = g.right;
  j["edges"] = json::array();
  for (auto [a, b] : g.edges) j["edges"].push_back({a, b});
  return j.dump();
}

}  // namespace mvmnl
