#include "enumerate.hpp"

#include <bit>
#include <cmath>

#include "mvmnl/error.hpp"

namespace mvmnl::detail {

GroupProblem make_group_problem(int rows, int cols) {
  GroupProblem gp;
  gp.rows = rows;
  gp.cols = cols;
  gp.W = Matrix(rows + 1, cols + 1);
  gp.V = Matrix(rows + 1, cols + 1);
  gp.row_size.assign(rows + 1, 1);
  gp.col_size.assign(cols + 1, 1);
  return gp;
}

double group_value(const GroupProblem& gp, const std::vector<uint8_t>& row_on,
                   const std::vector<uint8_t>& col_on) {
  double num = 0.0;
  double den = 0.0;
  for (int g = 0; g <= gp.rows; ++g) {
    if (g > 0 && !row_on[g - 1]) continue;
    for (int h = 0; h <= gp.cols; ++h) {
      if (h > 0 && !col_on[h - 1]) continue;
      num += gp.V(g, h);
      den += gp.W(g, h);
    }
  }
  return den > 0.0 ? num / den : 0.0;
}

GroupChoice enumerate_groups(const GroupProblem& gp) {
  if (gp.rows > 40 || gp.cols > 40 || gp.rows + gp.cols > 62)
    throw Error(ErrorCode::BudgetExceeded, "too many enumeration bits");
  const bool tr = gp.cols > gp.rows;
  const int a = tr ? gp.cols : gp.rows;
  const int b = tr ? gp.rows : gp.cols;
  auto W = [&](int i, int o) { return tr ? gp.W(o, i) : gp.W(i, o); };
  auto V = [&](int i, int o) { return tr ? gp.V(o, i) : gp.V(i, o); };
  const std::vector<int>& in_size = tr ? gp.col_size : gp.row_size;
  const std::vector<int>& out_size = tr ? gp.row_size : gp.col_size;
  const int in_cap = tr ? gp.col_cap : gp.row_cap;
  const int out_cap = tr ? gp.row_cap : gp.col_cap;

  std::vector<double> A(a + 1), B(a + 1);
  std::vector<uint8_t> out_on(b + 1, 0);
  out_on[0] = 1;
  uint64_t out_mask = 0;
  int out_total = 0;

  bool have = false;
  double best = 0.0;
  uint64_t best_x = 0, best_y = 0;
  uint64_t evaluated = 0;

  auto consider = [&](double v, uint64_t in_mask) {
    ++evaluated;
    uint64_t kx = tr ? out_mask : in_mask;
    uint64_t ky = tr ? in_mask : out_mask;
    if (!have) {
      have = true;
      best = v;
      best_x = kx;
      best_y = ky;
      return;
    }
    double tol = 1e-12 * std::max(1.0, std::fabs(best));
    if (v > best + tol) {
      best = v;
      best_x = kx;
      best_y = ky;
    } else if (v >= best - tol && (kx < best_x || (kx == best_x && ky < best_y))) {
      best = std::max(best, v);
      best_x = kx;
      best_y = ky;
    }
  };

  const uint64_t outer_states = uint64_t{1} << b;
  const uint64_t inner_states = uint64_t{1} << a;
  for (uint64_t s = 0; s < outer_states; ++s) {
    if (s > 0) {
      int h = std::countr_zero(s) + 1;
      out_on[h] ^= 1;
      out_mask ^= uint64_t{1} << (b - h);
      out_total += out_on[h] ? out_size[h] : -out_size[h];
    }
    if (out_cap >= 0 && out_total > out_cap) continue;
    for (int g = 0; g <= a; ++g) {
      double sa = 0.0, sb = 0.0;
      for (int h = 0; h <= b; ++h) {
        if (!out_on[h]) continue;
        sa += V(g, h);
        sb += W(g, h);
      }
      A[g] = sa;
      B[g] = sb;
    }
    double N = A[0];
    double D = B[0];
    uint64_t in_mask = 0;
    int in_total = 0;
    std::vector<uint8_t> in_on(a + 1, 0);
    consider(D > 0.0 ? N / D : 0.0, 0);
    for (uint64_t t = 1; t < inner_states; ++t) {
      int g = std::countr_zero(t) + 1;
      if (in_on[g]) {
        in_on[g] = 0;
        N -= A[g];
        D -= B[g];
        in_total -= in_size[g];
      } else {
        in_on[g] = 1;
        N += A[g];
        D += B[g];
        in_total += in_size[g];
      }
      in_mask ^= uint64_t{1} << (a - g);
      if (in_cap >= 0 && in_total > in_cap) continue;
      consider(D > 0.0 ? N / D : 0.0, in_mask);
    }
  }

  GroupChoice out;
  out.row_on.assign(gp.rows, 0);
  out.col_on.assign(gp.cols, 0);
  for (int g = 1; g <= gp.rows; ++g) out.row_on[g - 1] = (best_x >> (gp.rows - g)) & 1;
  for (int h = 1; h <= gp.cols; ++h) out.col_on[h - 1] = (best_y >> (gp.cols - h)) & 1;
  out.value = group_value(gp, out.row_on, out.col_on);
  out.evaluated = evaluated;
  return out;
}

}  // namespace mvmnl::detail
