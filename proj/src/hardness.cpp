#include "mvmnl/hardness.hpp"

#include "json.hpp"

namespace mvmnl {

using json = nlohmann::json;

std::string ReductionRecord::to_json() const {
  json j;
  j["reduction"] = name;
  j["source"] = json::parse(source);
  j["n"] = instance.n;
  j["m"] = instance.m;
  j["threshold"] = threshold;
  j["scale"] = scale;
  j["perm1"] = perm.perm1;
  j["perm2"] = perm.perm2;
  return j.dump(1);
}

DicutReduction reduce_max_dicut(const WeightedDigraph& g, int64_t t) {
  validate_digraph(g);
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "t must be a positive integer");
  const int n = g.n;
  DicutReduction out;
  out.scale = std::max<int64_t>(1, (2 * static_cast<int64_t>(n) + t - 1) / t);
  out.t_scaled = out.scale * t;
  out.scaled_graph = g;
  int64_t s = 0;
  for (auto& e : out.scaled_graph.edges) {
    e.weight *= out.scale;
    s += e.weight;
  }
  const double ts = static_cast<double>(out.t_scaled);
  out.raw.p.resize(n);
  out.raw.q.resize(n);
  out.raw.u = Matrix(n + 1, n + 1, 0.0);
  out.raw.u(0, 0) = 1.0;
  for (int i = 1; i <= n; ++i) {
    out.raw.p[i - 1] = ts - 0.5 - i;
    out.raw.q[i - 1] = i;
    out.raw.u(i, i) = 2.0 * static_cast<double>(s + 1);
  }
  for (const auto& e : out.scaled_graph.edges)
    out.raw.u(e.from, e.to) = static_cast<double>(e.weight) / (e.to - e.from - 0.5);
  auto [inst, perm] = normalize(out.raw);
  out.instance = std::move(inst);
  out.perm = std::move(perm);
  return out;
}

ReductionRecord dicut_record(const WeightedDigraph& g, int64_t t) {
  DicutReduction d = reduce_max_dicut(g, t);
  ReductionRecord r;
  r.name = "maxdicut";
  json src = json::parse(digraph_to_json(g));
  src["t"] = t;
  r.source = src.dump();
  r.instance = d.instance;
  r.perm = d.perm;
  r.threshold = static_cast<double>(d.t_scaled);
  r.scale = d.scale;
  return r;
}

Instance gap_instance(double M) {
  if (!(M > 1.0)) throw Error(ErrorCode::InvalidArgument, "gap_instance needs M > 1");
  Instance inst = Instance::zeros(4, 4);
  const double prices[5] = {0.0, 0.75 * M, 0.75, 0.375, 0.0};
  for (int k = 1; k <= 4; ++k) inst.p[k] = inst.q[k] = prices[k];
  inst.u(1, 4) = inst.u(4, 1) = 1.0 / M;
  inst.u(2, 3) = inst.u(3, 2) = 2.0;
  for (auto [i, j] : {std::pair{2, 4}, {3, 3}, {3, 4}, {4, 2}, {4, 3}, {4, 4}}) inst.u(i, j) = M;
  return inst;
}

Instance aro_worstcase(double M) {
  if (!(M > 2.0)) throw Error(ErrorCode::InvalidArgument, "aro_worstcase needs M > 2");
  const double eps = 2.0 / M;
  Instance inst = Instance::zeros(3, 3);
  const double prices[4] = {0.0, 1.0 + eps, 1.0, 0.0};
  for (int k = 1; k <= 3; ++k) inst.p[k] = inst.q[k] = prices[k];
  inst.u(2, 2) = inst.u(1, 3) = inst.u(3, 1) = M;
  return inst;
}

Instance reduce_bdks_capacitated(const BipartiteGraph& g, int kappa) {
  validate_bipartite(g);
  if (kappa < 1 || kappa > std::min(g.left, g.right))
    throw Error(ErrorCode::InvalidArgument, "kappa must lie in 1..min(|N|,|M|)");
  Instance inst = Instance::zeros(g.left, g.right);
  for (int i = 1; i <= g.left; ++i) inst.p[i] = 0.5;
  for (int j = 1; j <= g.right; ++j) inst.q[j] = 0.5;
  const double gv = g.left + g.right;
  for (auto [i, j] : g.edges) inst.u(i, j) = 1.0 / (gv * gv * gv);
  return inst;
}

GeneralPriceInstance reduce_bdks_generalprice(const BipartiteGraph& g, int kappa) {
  validate_bipartite(g);
  if (kappa < 1) throw Error(ErrorCode::InvalidArgument, "kappa must be at least 1");
  GeneralPriceInstance inst = GeneralPriceInstance::zeros(g.left, g.right);
  const double k = kappa;
  for (int i = 1; i <= g.left; ++i) inst.u(i, 0) = 1.0 / k;
  for (int j = 1; j <= g.right; ++j) inst.u(0, j) = 1.0 / k;
  for (int i = 1; i <= g.left; ++i)
    for (int j = 1; j <= g.right; ++j) inst.u(i, j) = 1.0 / (k * k);
  for (auto [i, j] : g.edges) inst.r(i, j) = 1.0;
  return inst;
}

}  // namespace mvmnl
