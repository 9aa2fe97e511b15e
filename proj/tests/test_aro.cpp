#include <cmath>

#include "doctest.h"
#include "mvmnl/aro.hpp"
#include "mvmnl/exact.hpp"
#include "mvmnl/hardness.hpp"

using namespace mvmnl;

namespace {

Instance e1() {
  Instance inst = Instance::zeros(1, 1);
  inst.p[1] = 3.0;
  inst.q[1] = 1.0;
  inst.u(1, 1) = 2.0;
  return inst;
}

Instance symmetric(uint64_t seed, int n) {
  Instance inst = gen_random(n, n, seed);
  for (int i = 0; i <= n; ++i) {
    inst.q[i] = inst.p[i];
    for (int j = 0; j < i; ++j) inst.u(j, i) = inst.u(i, j);
  }
  return inst;
}

}  // namespace

TEST_CASE("zeroed single-category examples") {
  SingleCategoryResult r = solve_zero_q(e1());
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.assortment == Assortment::from_indices(1, 1, {1}, {1}));
  CHECK(r.which == ZeroedCategory::ZeroQ);

  Instance no_p = gen_random(4, 5, 3);
  for (auto& v : no_p.p) v = 0.0;
  CHECK(solve_zero_q(no_p).value == 0.0);
  Instance no_q = gen_random(4, 5, 3);
  for (auto& v : no_q.q) v = 0.0;
  CHECK(solve_zero_p(no_q).value == 0.0);
}

TEST_CASE("Example 1 single-category optima") {
  const double M = 1e6, eps = 2.0 / M;
  Instance inst = aro_worstcase(M);
  SingleCategoryResult rp = solve_zero_q(inst);
  SingleCategoryResult rq = solve_zero_p(inst);
  CHECK(rp.value == doctest::Approx(M * (1 + eps) / (M + 1)).epsilon(1e-12));
  CHECK(rq.value == doctest::Approx(M * (1 + eps) / (M + 1)).epsilon(1e-12));
  CHECK(rp.assortment == Assortment::from_indices(3, 3, {1}, {3}));
}

TEST_CASE("symmetric instance gives equal single-category optima") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Instance inst = symmetric(seed, 6);
    CHECK(solve_zero_q(inst).value == doctest::Approx(solve_zero_p(inst).value).epsilon(1e-12));
  }
}

TEST_CASE("zeroed solves are exact") {
  for (uint64_t seed = 0; seed < 80; ++seed) {
    int n = 2 + static_cast<int>(seed % 7);
    int m = 16 - n - static_cast<int>(seed % 3);
    Instance inst = gen_random(n, m, 500 + seed);
    SingleCategoryResult rp = solve_zero_q(inst);
    SingleCategoryResult rq = solve_zero_p(inst);
    CHECK(rp.value == doctest::Approx(brute_force(zero_q(inst)).value).epsilon(1e-9));
    CHECK(rq.value == doctest::Approx(brute_force(zero_p(inst)).value).epsilon(1e-9));
    CHECK(rp.value == doctest::Approx(revenue(zero_q(inst), rp.assortment)).epsilon(1e-9));
    CHECK(rp.candidates <= long(n + 1) * (m + 1));
    CHECK(rq.candidates <= long(n + 1) * (m + 1));
  }
}

TEST_CASE("aro_best bounds") {
  for (uint64_t seed = 0; seed < 80; ++seed) {
    Instance inst = gen_random(7, 7, 900 + seed, default_price_dist(), Distribution::uniform(0, 20));
    AroResult a = aro_best(inst);
    double opt = brute_force(inst).value;
    CHECK(a.value >= 0.5 * opt - 1e-9);
    CHECK(a.value >= std::max(a.pi_p, a.pi_q) - 1e-9);
    CHECK(a.value <= opt + 1e-9);
    CHECK(a.value == doctest::Approx(revenue(inst, a.assortment)).epsilon(1e-12));
  }
}

TEST_CASE("aro_best examples") {
  AroResult a = aro_best(e1());
  CHECK(a.value == doctest::Approx(8.0 / 3.0).epsilon(1e-12));
  CHECK(a.assortment == Assortment::from_indices(1, 1, {1}, {1}));

  Instance qz = zero_q(gen_random(6, 6, 77));
  CHECK(aro_best(qz).value == doctest::Approx(brute_force(qz).value).epsilon(1e-12));

  const double M = 1e6;
  Instance w = aro_worstcase(M);
  CHECK(aro_best(w).value == doctest::Approx(M * (1 + 2 / M) / (M + 1)).epsilon(1e-12));
  Instance w10 = aro_worstcase(10.0);
  CHECK(std::fabs(aro_best(w10).value / brute_force(w10).value - 0.6) <= 1e-9);
}

TEST_CASE("transpose swaps the categories") {
  Instance inst = gen_random(3, 5, 4);
  Instance t = transpose(inst);
  CHECK(t.n == 5);
  CHECK(t.m == 3);
  CHECK(t.u(2, 1) == inst.u(1, 2));
  CHECK(transpose(t) == inst);
}
