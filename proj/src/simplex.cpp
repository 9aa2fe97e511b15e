#include <cmath>
#include <limits>
#include <vector>

#include "lp_internal.hpp"

namespace mvmnl {

namespace {

class Tableau {
 public:
  Tableau(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * (cols + 1), 0.0) {}

  double& at(int r, int c) { return a_[static_cast<size_t>(r) * (cols_ + 1) + c]; }
  double at(int r, int c) const { return a_[static_cast<size_t>(r) * (cols_ + 1) + c]; }
  double& rhs(int r) { return at(r, cols_); }
  double* row(int r) { return &a_[static_cast<size_t>(r) * (cols_ + 1)]; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

 private:
  int rows_;
  int cols_;
  std::vector<double> a_;
};

struct SimplexRun {
  Tableau t;
  std::vector<double> d;  // reduced costs, size cols + 1 (last entry = -objective)
  std::vector<int> basis;

  SimplexRun(int rows, int cols) : t(rows, cols), d(cols + 1, 0.0), basis(rows, -1) {}

  void pivot(int r, int c) {
    double* pr = t.row(r);
    const int width = t.cols() + 1;
    double inv = 1.0 / pr[c];
    std::vector<int> nz;
    nz.reserve(64);
    for (int k = 0; k < width; ++k) {
      if (pr[k] != 0.0) {
        pr[k] *= inv;
        nz.push_back(k);
      }
    }
    pr[c] = 1.0;
    for (int i = 0; i < t.rows(); ++i) {
      if (i == r) continue;
      double* ri = t.row(i);
      double f = ri[c];
      if (f == 0.0) continue;
      for (int k : nz) ri[k] -= f * pr[k];
      ri[c] = 0.0;
    }
    double f = d[c];
    if (f != 0.0) {
      for (int k : nz) d[k] -= f * pr[k];
      d[c] = 0.0;
    }
    basis[r] = c;
  }
};

}  // namespace

LpRaw simplex_raw(const LpModel& mdl, PivotRule rule) {
  const int np = static_cast<int>(mdl.pairs.size());
  const int nv = mdl.num_variables();
  const int ni = mdl.num_inequalities();
  const int rows = ni + 1;
  const int cols = nv + ni;
  const int W = 0;
  auto X = [&](int i) { return i; };
  auto Y = [&](int j) { return mdl.n + j; };
  auto Z = [&](int k) { return 1 + mdl.n + mdl.m + k; };

  if (!(mdl.eq_w > 0.0)) throw Error(ErrorCode::InvalidArgument, "model needs a positive w coefficient");

  SimplexRun run(rows, cols);
  Tableau& t = run.t;
  int r = 0;
  for (int k = 0; k < np; ++k) {
    auto [i, j] = mdl.pairs[k];
    t.at(r, Z(k)) = 1.0;
    t.at(r, X(i)) = -1.0;
    ++r;
    t.at(r, Z(k)) = 1.0;
    t.at(r, Y(j)) = -1.0;
    ++r;
    t.at(r, X(i)) = 1.0;
    t.at(r, Y(j)) = 1.0;
    t.at(r, W) = -1.0;
    t.at(r, Z(k)) = -1.0;
    ++r;
  }
  for (int i = 1; i <= mdl.n; ++i) {
    t.at(r, X(i)) = 1.0;
    t.at(r, W) = -1.0;
    ++r;
  }
  for (int j = 1; j <= mdl.m; ++j) {
    t.at(r, Y(j)) = 1.0;
    t.at(r, W) = -1.0;
    ++r;
  }
  for (int s = 0; s < ni; ++s) {
    t.at(s, nv + s) = 1.0;
    run.basis[s] = nv + s;
  }
  const int eq = ni;
  t.at(eq, W) = mdl.eq_w;
  for (int i = 1; i <= mdl.n; ++i) t.at(eq, X(i)) = mdl.eq_x[i];
  for (int j = 1; j <= mdl.m; ++j) t.at(eq, Y(j)) = mdl.eq_y[j];
  for (int k = 0; k < np; ++k) t.at(eq, Z(k)) = mdl.eq_z[k];
  t.rhs(eq) = 1.0;

  run.d[W] = mdl.obj_w;
  for (int i = 1; i <= mdl.n; ++i) run.d[X(i)] = mdl.obj_x[i];
  for (int j = 1; j <= mdl.m; ++j) run.d[Y(j)] = mdl.obj_y[j];
  for (int k = 0; k < np; ++k) run.d[Z(k)] = mdl.obj_z[k];

  run.pivot(eq, W);

  const double dtol = 1e-11 * detail::objective_scale(mdl);
  bool bland = rule == PivotRule::Bland;
  int degenerate_streak = 0;
  const long max_iter = 50L * (rows + cols) + 1000;
  for (long it = 0;; ++it) {
    if (it > max_iter) throw Error(ErrorCode::VertexClassificationFailed, "simplex iteration limit reached");
    int enter = -1;
    if (bland) {
      for (int c = 0; c < cols; ++c)
        if (run.d[c] > dtol) {
          enter = c;
          break;
        }
    } else {
      double best = dtol;
      for (int c = 0; c < cols; ++c)
        if (run.d[c] > best) {
          best = run.d[c];
          enter = c;
        }
    }
    if (enter < 0) break;

    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    double best_piv = 0.0;
    for (int i = 0; i < rows; ++i) {
      double a = t.at(i, enter);
      if (a <= kPivotTol) continue;
      double ratio = std::max(t.rhs(i), 0.0) / a;
      if (ratio < best_ratio - 1e-12) {
        best_ratio = ratio;
        leave = i;
        best_piv = a;
      } else if (ratio <= best_ratio + 1e-12) {
        bool take = bland ? run.basis[i] < run.basis[leave] : a > best_piv;
        if (take) {
          best_ratio = std::min(best_ratio, ratio);
          leave = i;
          best_piv = a;
        }
      }
    }
    if (leave < 0) throw Error(ErrorCode::InvalidArgument, "model is unbounded");
    if (best_ratio <= 1e-12) {
      if (++degenerate_streak > 50) bland = true;
    } else {
      degenerate_streak = 0;
    }
    run.pivot(leave, enter);
  }

  std::vector<double> val(cols, 0.0);
  for (int i = 0; i < rows; ++i) val[run.basis[i]] = std::max(t.rhs(i), 0.0);
  LpRaw raw;
  raw.w = val[W];
  raw.x.assign(mdl.n + 1, 0.0);
  raw.y.assign(mdl.m + 1, 0.0);
  raw.z.assign(np, 0.0);
  for (int i = 1; i <= mdl.n; ++i) raw.x[i] = val[X(i)];
  for (int j = 1; j <= mdl.m; ++j) raw.y[j] = val[Y(j)];
  for (int k = 0; k < np; ++k) raw.z[k] = val[Z(k)];
  return raw;
}

ScaledLpSolution solve_vertex_simplex(const LpModel& mdl, PivotRule rule) {
  auto sol = detail::classify(mdl, simplex_raw(mdl, rule));
  if (!sol && rule != PivotRule::Bland) {
    sol = detail::classify(mdl, simplex_raw(mdl, PivotRule::Bland));
    if (sol) sol->used_fallback = true;
  }
  if (!sol) throw Error(ErrorCode::VertexClassificationFailed, "vertex values are not in {0, 1/2, 1}");
  return *sol;
}

}  // namespace mvmnl
