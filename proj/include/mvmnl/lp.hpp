#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mvmnl/instance.hpp"

namespace mvmnl {

enum class Label : uint8_t { Zero, Half, One };

// max  obj_w*w + sum obj_x*x + sum obj_y*y + sum obj_z*z
// s.t. eq_w*w + sum eq_x*x + sum eq_y*y + sum eq_z*z = 1
//      z <= x, z <= y, z >= x + y - w, x <= w, y <= w, all >= 0
// x and y are indexed 1..n and 1..m (slot 0 unused); z follows `pairs`.
struct LpModel {
  int n = 0;
  int m = 0;
  std::vector<std::pair<int, int>> pairs;
  double obj_w = 0.0;
  double eq_w = 1.0;
  std::vector<double> obj_x, eq_x;
  std::vector<double> obj_y, eq_y;
  std::vector<double> obj_z, eq_z;

  int num_variables() const { return 1 + n + m + static_cast<int>(pairs.size()); }
  int num_inequalities() const { return 3 * static_cast<int>(pairs.size()) + n + m; }
  std::string to_lp_text() const;
};

struct ScaledLpSolution {
  int n = 0;
  int m = 0;
  double w = 0.0;
  double r_star = 0.0;
  std::vector<double> xbar;  // size n+1, slot 0 unused
  std::vector<double> ybar;
  std::vector<std::pair<int, int>> pairs;
  std::vector<double> zbar;
  std::vector<Label> lx;  // size n+1
  std::vector<Label> ly;
  std::vector<Label> lz;
  bool used_fallback = false;

  std::string to_json() const;
};

struct LpRaw {
  double w = 0.0;
  std::vector<double> x, y, z;
};

inline constexpr double kClassifyTol = 1e-6;
inline constexpr double kPivotTol = 1e-9;

LpModel build_lp(const Instance& inst);

// Vertex optimum via Dinkelbach iterations on a max-flow roof-dual oracle, followed
// by a simplex crossover on the face fixed by the integral coordinates.
ScaledLpSolution solve_vertex(const LpModel& model);

enum class PivotRule { DantzigThenBland, Bland };

// Dense tableau primal simplex on the whole model.
ScaledLpSolution solve_vertex_simplex(const LpModel& model, PivotRule rule = PivotRule::DantzigThenBland);

LpRaw simplex_raw(const LpModel& model, PivotRule rule = PivotRule::DantzigThenBland);
double model_objective(const LpModel& model, const LpRaw& raw);
double model_equality(const LpModel& model, const LpRaw& raw);
double max_violation(const LpModel& model, const LpRaw& raw);
LpRaw unscale(const ScaledLpSolution& sol);

bool is_integral(const ScaledLpSolution& sol);
Assortment support(const ScaledLpSolution& sol);
Assortment random_round(const ScaledLpSolution& sol, uint64_t seed);

ScaledLpSolution solve_lp(const Instance& inst);

const char* label_name(Label l);

}  // namespace mvmnl
