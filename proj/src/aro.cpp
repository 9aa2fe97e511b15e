#include "mvmnl/aro.hpp"

#include <algorithm>
#include <numeric>

namespace mvmnl {

Instance zero_q(const Instance& inst) {
  Instance out = inst;
  std::fill(out.q.begin(), out.q.end(), 0.0);
  return out;
}

Instance zero_p(const Instance& inst) {
  Instance out = inst;
  std::fill(out.p.begin(), out.p.end(), 0.0);
  return out;
}

Instance transpose(const Instance& inst) {
  Instance t = Instance::zeros(inst.m, inst.n);
  t.p = inst.q;
  t.q = inst.p;
  for (int i = 0; i <= inst.n; ++i)
    for (int j = 0; j <= inst.m; ++j) t.u(j, i) = inst.u(i, j);
  return t;
}

SingleCategoryResult solve_zero_q(const Instance& inst) {
  const int n = inst.n;
  const int m = inst.m;
  // Column sums over the current top-k set of category 1, including the no-purchase row.
  std::vector<double> num(m + 1, 0.0), den(m + 1, 0.0);
  for (int j = 0; j <= m; ++j) {
    num[j] = 0.0;
    den[j] = inst.u(0, j);
  }
  SingleCategoryResult best;
  best.which = ZeroedCategory::ZeroQ;
  best.assortment = Assortment::empty(n, m);
  best.value = 0.0;
  bool have = false;
  std::vector<int> order(m);
  std::vector<double> adj(m + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      for (int j = 0; j <= m; ++j) {
        num[j] += inst.u(k, j) * inst.p[k];
        den[j] += inst.u(k, j);
      }
    }
    for (int j = 1; j <= m; ++j) adj[j] = den[j] > 0.0 ? num[j] / den[j] : 0.0;
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return adj[a] > adj[b]; });
    double N = num[0];
    double D = den[0];
    for (int l = 0; l <= m; ++l) {
      if (l > 0) {
        N += num[order[l - 1]];
        D += den[order[l - 1]];
      }
      ++best.candidates;
      double v = D > 0.0 ? N / D : 0.0;
      if (!have || v > best.value) {
        have = true;
        best.value = v;
        Assortment a = Assortment::empty(n, m);
        for (int i = 1; i <= k; ++i) a.x[i - 1] = 1;
        for (int t = 0; t < l; ++t) a.y[order[t] - 1] = 1;
        best.assortment = a;
      }
    }
  }
  best.value = revenue(zero_q(inst), best.assortment);
  return best;
}

SingleCategoryResult solve_zero_p(const Instance& inst) {
  SingleCategoryResult r = solve_zero_q(transpose(inst));
  Assortment a;
  a.x = r.assortment.y;
  a.y = r.assortment.x;
  r.assortment = a;
  r.which = ZeroedCategory::ZeroP;
  r.value = revenue(zero_p(inst), a);
  return r;
}

AroResult aro_best(const Instance& inst) {
  SingleCategoryResult rp = solve_zero_q(inst);
  SingleCategoryResult rq = solve_zero_p(inst);
  AroResult out;
  out.pi_p = rp.value;
  out.pi_q = rq.value;
  const SingleCategoryResult& pick = rp.value >= rq.value ? rp : rq;
  out.which = pick.which;
  out.assortment = pick.assortment;
  out.value = revenue(inst, out.assortment);
  return out;
}

}  // namespace mvmnl
