#include <chrono>
#include <cmath>

#include "doctest.h"
#include "mvmnl/exact.hpp"
#include "mvmnl/hardness.hpp"
#include "mvmnl/lp.hpp"

using namespace mvmnl;

namespace {

Instance e1() {
  Instance inst = Instance::zeros(1, 1);
  inst.p[1] = 3.0;
  inst.q[1] = 1.0;
  inst.u(1, 1) = 2.0;
  return inst;
}

double expected(Label l) { return l == Label::Zero ? 0.0 : (l == Label::Half ? 0.5 : 1.0); }

void check_classified(const ScaledLpSolution& s) {
  for (int i = 1; i <= s.n; ++i) CHECK(std::fabs(s.xbar[i] - expected(s.lx[i])) <= kClassifyTol);
  for (int j = 1; j <= s.m; ++j) CHECK(std::fabs(s.ybar[j] - expected(s.ly[j])) <= kClassifyTol);
  for (size_t k = 0; k < s.zbar.size(); ++k) CHECK(std::fabs(s.zbar[k] - expected(s.lz[k])) <= kClassifyTol);
}

Distribution heavy() { return Distribution::uniform(0.0, 100.0); }

}  // namespace

TEST_CASE("build_lp on E1") {
  LpModel mdl = build_lp(e1());
  CHECK(mdl.num_variables() == 4);
  REQUIRE(mdl.pairs.size() == 1);
  CHECK(mdl.pairs[0] == std::pair{1, 1});
  CHECK(mdl.eq_w == 1.0);
  CHECK(mdl.eq_z[0] == 2.0);
  CHECK(mdl.eq_x[1] == 0.0);
  CHECK(mdl.eq_y[1] == 0.0);
  CHECK(mdl.obj_z[0] == 8.0);
  CHECK(mdl.num_inequalities() == 5);
  std::string text = mdl.to_lp_text();
  CHECK(text.find("z1_1") != std::string::npos);
}

TEST_CASE("build_lp drops zero-weight pairs") {
  Instance inst = Instance::zeros(2, 2);
  inst.p = {0, 2, 1};
  inst.q = {0, 3, 1};
  inst.u(1, 0) = 0.5;
  inst.u(0, 2) = 0.25;
  LpModel mdl = build_lp(inst);
  CHECK(mdl.pairs.empty());
  CHECK(mdl.obj_x[1] == 1.0);
  CHECK(mdl.obj_x[2] == 0.0);
  CHECK(mdl.obj_y[2] == 0.25);
  CHECK(mdl.eq_x[1] == 0.5);
}

TEST_CASE("build_lp scales to 150x150") {
  Instance inst = gen_random(150, 150, 1);
  auto t0 = std::chrono::steady_clock::now();
  LpModel mdl = build_lp(inst);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(mdl.num_variables() == 22801);
  CHECK(secs < 1.0);
}

TEST_CASE("solve_vertex examples") {
  ScaledLpSolution s = solve_lp(e1());
  CHECK(s.w == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(s.xbar[1] == doctest::Approx(1.0));
  CHECK(s.ybar[1] == doctest::Approx(1.0));
  CHECK(s.zbar[0] == doctest::Approx(1.0));
  CHECK(s.r_star == doctest::Approx(8.0 / 3.0).epsilon(1e-12));
  CHECK(is_integral(s));

  ScaledLpSolution g = solve_lp(gap_instance(100.0));
  CHECK(g.r_star >= 3.0 / (3.0 + 0.01) - 1e-12);
  CHECK_FALSE(is_integral(g));

  Instance flat = Instance::zeros(2, 2);
  ScaledLpSolution f = solve_lp(flat);
  CHECK(f.w == doctest::Approx(1.0));
  CHECK(f.r_star == 0.0);
  CHECK(is_integral(f));
}

TEST_CASE("relaxation soundness against brute force") {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    Instance inst = gen_random(8, 8, seed, default_price_dist(), heavy());
    ScaledLpSolution s = solve_lp(inst);
    Solution b = brute_force(inst);
    CHECK(s.r_star >= b.value - 1e-9);
    if (is_integral(s)) CHECK(revenue(inst, support(s)) == doctest::Approx(s.r_star).epsilon(1e-9));
  }
}

TEST_CASE("half-integrality, sign pattern and feasibility") {
  int non_integral = 0;
  for (uint64_t seed = 0; seed < 150; ++seed) {
    Instance inst = gen_random(12, 12, seed, default_price_dist(), heavy());
    LpModel mdl = build_lp(inst);
    ScaledLpSolution s = solve_vertex(mdl);
    check_classified(s);
    LpRaw raw = unscale(s);
    CHECK(max_violation(mdl, raw) <= 1e-8);
    CHECK(std::fabs(model_objective(mdl, raw) - s.r_star) <= 1e-9 * std::max(1.0, s.r_star));
    if (!is_integral(s)) ++non_integral;
    for (size_t k = 0; k < s.pairs.size(); ++k) {
      auto [i, j] = s.pairs[k];
      if (s.lx[i] != Label::Half || s.ly[j] != Label::Half) continue;
      double price = inst.p[i] + inst.q[j];
      if (price > s.r_star * (1 + kClassifyTol)) CHECK(s.lz[k] == Label::Half);
      if (price < s.r_star * (1 - kClassifyTol)) CHECK(s.lz[k] == Label::Zero);
    }
  }
  CHECK(non_integral > 0);
}

TEST_CASE("flow solver agrees with the simplex") {
  int non_integral = 0;
  for (uint64_t seed = 0; seed < 80; ++seed) {
    Instance inst = gen_random(10, 10, 1000 + seed, default_price_dist(), heavy());
    LpModel mdl = build_lp(inst);
    ScaledLpSolution a = solve_vertex(mdl);
    ScaledLpSolution b = solve_vertex_simplex(mdl);
    CHECK(a.r_star == doctest::Approx(b.r_star).epsilon(1e-9));
    CHECK_FALSE(a.used_fallback);
    if (!is_integral(a)) ++non_integral;
    ScaledLpSolution c = solve_vertex_simplex(mdl, PivotRule::Bland);
    CHECK(c.r_star == doctest::Approx(b.r_star).epsilon(1e-9));
  }
  CHECK(non_integral > 0);
}

TEST_CASE("price scaling scales r_star") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Instance inst = gen_random(9, 7, seed, default_price_dist(), heavy());
    Instance scaled = inst;
    for (auto& v : scaled.p) v *= 10.0;
    for (auto& v : scaled.q) v *= 10.0;
    CHECK(solve_lp(scaled).r_star == doctest::Approx(10.0 * solve_lp(inst).r_star).epsilon(1e-12));
  }
}

TEST_CASE("random_round") {
  ScaledLpSolution integral = solve_lp(e1());
  CHECK(random_round(integral, 1) == support(integral));
  CHECK(random_round(integral, 99) == support(integral));

  ScaledLpSolution s = solve_lp(gap_instance(1e4));
  REQUIRE_FALSE(is_integral(s));
  CHECK(random_round(s, 5) == random_round(s, 5));

  const int draws = 10000;
  std::vector<int> cx(s.n + 1, 0), cy(s.m + 1, 0);
  for (int k = 0; k < draws; ++k) {
    Assortment a = random_round(s, static_cast<uint64_t>(k));
    for (int i = 1; i <= s.n; ++i) {
      if (s.lx[i] == Label::One) CHECK(a.x[i - 1] == 1);
      if (s.lx[i] == Label::Zero) CHECK(a.x[i - 1] == 0);
      cx[i] += a.x[i - 1];
    }
    for (int j = 1; j <= s.m; ++j) cy[j] += a.y[j - 1];
  }
  for (int i = 1; i <= s.n; ++i)
    if (s.lx[i] == Label::Half) CHECK(std::fabs(cx[i] / double(draws) - 0.5) <= 0.02);
  for (int j = 1; j <= s.m; ++j)
    if (s.ly[j] == Label::Half) CHECK(std::fabs(cy[j] / double(draws) - 0.5) <= 0.02);
}

TEST_CASE("solution json") {
  ScaledLpSolution s = solve_lp(gap_instance(100.0));
  std::string j = s.to_json();
  CHECK(j.find("\"r_star\"") != std::string::npos);
  CHECK(j.find("\"labels\"") != std::string::npos);
  CHECK(std::string(label_name(Label::Half)) == "half");
}
