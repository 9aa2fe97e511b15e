#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "lp_internal.hpp"

namespace mvmnl {

namespace {

class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : adj_(nodes), level_(nodes), iter_(nodes) {}

  void add_edge(int u, int v, double cap) {
    if (cap <= 0.0) return;
    adj_[u].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({v, cap});
    adj_[v].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({u, 0.0});
    max_cap_ = std::max(max_cap_, cap);
  }

  double run(int s, int t) {
    eps_ = 1e-13 * std::max(max_cap_, 1e-300);
    double flow = 0.0;
    while (bfs(s, t)) {
      std::fill(iter_.begin(), iter_.end(), 0);
      for (;;) {
        double f = dfs(s, t, std::numeric_limits<double>::infinity());
        if (f <= eps_) break;
        flow += f;
      }
    }
    return flow;
  }

  std::vector<uint8_t> source_side(int s) const {
    std::vector<uint8_t> seen(adj_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : adj_[v]) {
        const Edge& ed = edges_[e];
        if (ed.cap > eps_ && !seen[ed.to]) {
          seen[ed.to] = 1;
          stack.push_back(ed.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Edge {
    int to;
    double cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<int> queue{s};
    level_[s] = 0;
    for (size_t h = 0; h < queue.size(); ++h) {
      int v = queue[h];
      for (int e : adj_[v]) {
        const Edge& ed = edges_[e];
        if (ed.cap > eps_ && level_[ed.to] < 0) {
          level_[ed.to] = level_[v] + 1;
          queue.push_back(ed.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  double dfs(int v, int t, double pushed) {
    if (v == t) return pushed;
    for (int& k = iter_[v]; k < static_cast<int>(adj_[v].size()); ++k) {
      int e = adj_[v][k];
      Edge& ed = edges_[e];
      if (ed.cap <= eps_ || level_[ed.to] != level_[v] + 1) continue;
      double got = dfs(ed.to, t, std::min(pushed, ed.cap));
      if (got > eps_) {
        ed.cap -= got;
        edges_[e ^ 1].cap += got;
        return got;
      }
    }
    return 0.0;
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<int> iter_;
  double max_cap_ = 0.0;
  double eps_ = 0.0;
};

struct Point {
  std::vector<double> x;  // 1..n, values in {0, 1/2, 1}
  std::vector<double> y;
  std::vector<double> z;
  double num = 0.0;
  double den = 0.0;
  double ratio() const { return num / den; }
};

// Half-integral maximizer of  sum a x + sum b y + sum c z  over the scaled polytope,
// via the doubled-graph construction for the roof dual.
Point roof_dual_point(const LpModel& mdl, double r) {
  const int n = mdl.n;
  const int m = mdl.m;
  const int V = n + m;
  const int S = 2 * V;
  const int T = 2 * V + 1;
  std::vector<double> theta1(V, 0.0);
  for (int i = 1; i <= n; ++i) theta1[i - 1] = -(mdl.obj_x[i] - r * mdl.eq_x[i]);
  for (int j = 1; j <= m; ++j) theta1[n + j - 1] = -(mdl.obj_y[j] - r * mdl.eq_y[j]);
  std::vector<double> c(mdl.pairs.size());
  MaxFlow g(2 * V + 2);
  for (size_t k = 0; k < mdl.pairs.size(); ++k) {
    c[k] = mdl.obj_z[k] - r * mdl.eq_z[k];
    int p = mdl.pairs[k].first - 1;
    int q = n + mdl.pairs[k].second - 1;
    if (c[k] > 0.0) {
      theta1[p] -= c[k];
      g.add_edge(q, p, c[k]);
      g.add_edge(V + p, V + q, c[k]);
    } else if (c[k] < 0.0) {
      g.add_edge(V + p, q, -c[k]);
      g.add_edge(V + q, p, -c[k]);
    }
  }
  for (int v = 0; v < V; ++v) {
    if (theta1[v] > 0.0) {
      g.add_edge(S, v, theta1[v]);
      g.add_edge(V + v, T, theta1[v]);
    } else if (theta1[v] < 0.0) {
      g.add_edge(v, T, -theta1[v]);
      g.add_edge(S, V + v, -theta1[v]);
    }
  }
  g.run(S, T);
  auto side = g.source_side(S);
  auto value = [&](int v) {
    bool p_in_s = side[v];
    bool pbar_in_s = side[V + v];
    if (!p_in_s && pbar_in_s) return 1.0;
    if (p_in_s && !pbar_in_s) return 0.0;
    return 0.5;
  };
  Point pt;
  pt.x.assign(n + 1, 0.0);
  pt.y.assign(m + 1, 0.0);
  for (int i = 1; i <= n; ++i) pt.x[i] = value(i - 1);
  for (int j = 1; j <= m; ++j) pt.y[j] = value(n + j - 1);
  pt.z.resize(mdl.pairs.size());
  pt.num = mdl.obj_w;
  pt.den = mdl.eq_w;
  for (int i = 1; i <= n; ++i) {
    pt.num += mdl.obj_x[i] * pt.x[i];
    pt.den += mdl.eq_x[i] * pt.x[i];
  }
  for (int j = 1; j <= m; ++j) {
    pt.num += mdl.obj_y[j] * pt.y[j];
    pt.den += mdl.eq_y[j] * pt.y[j];
  }
  for (size_t k = 0; k < mdl.pairs.size(); ++k) {
    double xv = pt.x[mdl.pairs[k].first];
    double yv = pt.y[mdl.pairs[k].second];
    double z = c[k] < 0.0 ? std::max(0.0, xv + yv - 1.0) : std::min(xv, yv);
    pt.z[k] = z;
    pt.num += mdl.obj_z[k] * z;
    pt.den += mdl.eq_z[k] * z;
  }
  return pt;
}

Point dinkelbach(const LpModel& mdl) {
  double r = mdl.obj_w / mdl.eq_w;
  Point best;
  bool have = false;
  for (int it = 0; it < 200; ++it) {
    Point pt = roof_dual_point(mdl, r);
    double nr = pt.ratio();
    if (!have || nr > best.ratio()) {
      best = pt;
      have = true;
    }
    if (nr <= r + 1e-14 * std::max(1.0, std::fabs(r))) break;
    r = nr;
  }
  return best;
}

LpRaw raw_from_point(const Point& pt) {
  LpRaw raw;
  raw.w = 1.0 / pt.den;
  raw.x.resize(pt.x.size());
  raw.y.resize(pt.y.size());
  raw.z.resize(pt.z.size());
  for (size_t i = 0; i < pt.x.size(); ++i) raw.x[i] = pt.x[i] * raw.w;
  for (size_t j = 0; j < pt.y.size(); ++j) raw.y[j] = pt.y[j] * raw.w;
  for (size_t k = 0; k < pt.z.size(); ++k) raw.z[k] = pt.z[k] * raw.w;
  return raw;
}

// Restricts the model to the face where every integral coordinate of `pt` is fixed,
// solves that smaller LP to a vertex and lifts the result back.
LpRaw crossover(const LpModel& mdl, const Point& pt) {
  std::vector<int> rx(mdl.n + 1, 0), ry(mdl.m + 1, 0);
  LpModel sub;
  sub.obj_w = mdl.obj_w;
  sub.eq_w = mdl.eq_w;
  sub.obj_x.push_back(0.0);
  sub.eq_x.push_back(0.0);
  sub.obj_y.push_back(0.0);
  sub.eq_y.push_back(0.0);
  std::vector<int> back_x{0}, back_y{0};
  for (int i = 1; i <= mdl.n; ++i) {
    if (pt.x[i] == 0.5) {
      rx[i] = static_cast<int>(back_x.size());
      back_x.push_back(i);
      sub.obj_x.push_back(mdl.obj_x[i]);
      sub.eq_x.push_back(mdl.eq_x[i]);
    } else if (pt.x[i] == 1.0) {
      sub.obj_w += mdl.obj_x[i];
      sub.eq_w += mdl.eq_x[i];
    }
  }
  for (int j = 1; j <= mdl.m; ++j) {
    if (pt.y[j] == 0.5) {
      ry[j] = static_cast<int>(back_y.size());
      back_y.push_back(j);
      sub.obj_y.push_back(mdl.obj_y[j]);
      sub.eq_y.push_back(mdl.eq_y[j]);
    } else if (pt.y[j] == 1.0) {
      sub.obj_w += mdl.obj_y[j];
      sub.eq_w += mdl.eq_y[j];
    }
  }
  sub.n = static_cast<int>(back_x.size()) - 1;
  sub.m = static_cast<int>(back_y.size()) - 1;
  std::vector<int> sub_pair(mdl.pairs.size(), -1);
  for (size_t k = 0; k < mdl.pairs.size(); ++k) {
    auto [i, j] = mdl.pairs[k];
    double xv = pt.x[i], yv = pt.y[j];
    if (xv == 0.0 || yv == 0.0) continue;
    if (xv == 1.0 && yv == 1.0) {
      sub.obj_w += mdl.obj_z[k];
      sub.eq_w += mdl.eq_z[k];
    } else if (xv == 1.0) {
      sub.obj_y[ry[j]] += mdl.obj_z[k];
      sub.eq_y[ry[j]] += mdl.eq_z[k];
    } else if (yv == 1.0) {
      sub.obj_x[rx[i]] += mdl.obj_z[k];
      sub.eq_x[rx[i]] += mdl.eq_z[k];
    } else {
      sub_pair[k] = static_cast<int>(sub.pairs.size());
      sub.pairs.push_back({rx[i], ry[j]});
      sub.obj_z.push_back(mdl.obj_z[k]);
      sub.eq_z.push_back(mdl.eq_z[k]);
    }
  }

  LpRaw s = simplex_raw(sub);
  LpRaw raw;
  raw.w = s.w;
  raw.x.assign(mdl.n + 1, 0.0);
  raw.y.assign(mdl.m + 1, 0.0);
  raw.z.assign(mdl.pairs.size(), 0.0);
  for (int i = 1; i <= mdl.n; ++i) raw.x[i] = pt.x[i] == 0.5 ? s.x[rx[i]] : pt.x[i] * s.w;
  for (int j = 1; j <= mdl.m; ++j) raw.y[j] = pt.y[j] == 0.5 ? s.y[ry[j]] : pt.y[j] * s.w;
  for (size_t k = 0; k < mdl.pairs.size(); ++k) {
    auto [i, j] = mdl.pairs[k];
    double xv = pt.x[i], yv = pt.y[j];
    if (xv == 0.0 || yv == 0.0) continue;
    if (sub_pair[k] >= 0) {
      raw.z[k] = s.z[sub_pair[k]];
    } else if (xv == 1.0 && yv == 1.0) {
      raw.z[k] = s.w;
    } else if (xv == 1.0) {
      raw.z[k] = raw.y[j];
    } else {
      raw.z[k] = raw.x[i];
    }
  }
  return raw;
}

}  // namespace

ScaledLpSolution solve_vertex(const LpModel& mdl) {
  if (!(mdl.eq_w > 0.0)) throw Error(ErrorCode::InvalidArgument, "model needs a positive w coefficient");
  Point pt = dinkelbach(mdl);
  bool has_half = std::any_of(pt.x.begin() + 1, pt.x.end(), [](double v) { return v == 0.5; }) ||
                  std::any_of(pt.y.begin() + 1, pt.y.end(), [](double v) { return v == 0.5; });
  LpRaw raw = has_half ? crossover(mdl, pt) : raw_from_point(pt);
  auto sol = detail::classify(mdl, raw);
  double target = pt.ratio();
  double tol = 1e-9 * std::max(1.0, std::fabs(target));
  if (sol && sol->r_star >= target - tol && max_violation(mdl, raw) <= 1e-8) return *sol;
  ScaledLpSolution fb = solve_vertex_simplex(mdl, PivotRule::Bland);
  fb.used_fallback = true;
  return fb;
}

}  // namespace mvmnl
