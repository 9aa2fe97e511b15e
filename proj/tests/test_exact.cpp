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

double naive_best(const Instance& inst, int k1, int k2) {
  double best = 0.0;
  const int bits = inst.n + inst.m;
  for (int mask = 0; mask < (1 << bits); ++mask) {
    Assortment a = Assortment::empty(inst.n, inst.m);
    int cx = 0, cy = 0;
    for (int i = 0; i < inst.n; ++i) cx += a.x[i] = (mask >> i) & 1;
    for (int j = 0; j < inst.m; ++j) cy += a.y[j] = (mask >> (inst.n + j)) & 1;
    if (cx > k1 || cy > k2) continue;
    best = std::max(best, revenue(inst, a));
  }
  return best;
}

}  // namespace

TEST_CASE("brute_force examples") {
  Solution s = brute_force(e1());
  CHECK(s.value == doctest::Approx(8.0 / 3.0).epsilon(1e-15));
  CHECK(s.assortment == Assortment::from_indices(1, 1, {1}, {1}));

  Instance flat = Instance::zeros(3, 2);
  flat.p = {0, 3, 2, 1};
  flat.q = {0, 2, 1};
  Solution z = brute_force(flat);
  CHECK(z.value == 0.0);
  CHECK(z.assortment == Assortment::empty(3, 2));

  const double M = 1e6;
  Solution ex = brute_force(aro_worstcase(M));
  CHECK(ex.value == doctest::Approx(2 * M / (M + 1)).epsilon(1e-12));
  CHECK(ex.assortment == Assortment::from_indices(3, 3, {2}, {2}));

  CHECK_THROWS_AS(brute_force(gen_random(13, 12, 1)), Error);
}

TEST_CASE("brute_force agrees with naive enumeration") {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    Instance inst = gen_random(4, 4, seed);
    Solution s = brute_force(inst);
    CHECK(s.value == doctest::Approx(naive_best(inst, 4, 4)).epsilon(1e-12));
    CHECK(revenue(inst, s.assortment) == doctest::Approx(s.value).epsilon(1e-12));
    for (int k1 = 0; k1 <= 4; ++k1)
      for (int k2 = 0; k2 <= 4; ++k2) {
        double c = brute_force_capacitated(inst, k1, k2).value;
        CHECK(c == doctest::Approx(naive_best(inst, k1, k2)).epsilon(1e-12));
        if (k1 > 0) CHECK(c >= brute_force_capacitated(inst, k1 - 1, k2).value - 1e-15);
        if (k2 > 0) CHECK(c >= brute_force_capacitated(inst, k1, k2 - 1).value - 1e-15);
      }
  }
}

TEST_CASE("brute_force dominates sampled assortments") {
  std::mt19937_64 rng(3);
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Instance inst = gen_random(8, 8, seed);
    double best = brute_force(inst).value;
    for (int k = 0; k < 200; ++k) {
      Assortment a = Assortment::empty(8, 8);
      for (auto& b : a.x) b = rng() & 1;
      for (auto& b : a.y) b = rng() & 1;
      CHECK(revenue(inst, a) <= best + 1e-12);
    }
    CHECK(best == brute_force_capacitated(inst, 8, 8).value);
  }
}

TEST_CASE("brute_force ties break to the lexicographically smallest pattern") {
  Instance inst = Instance::zeros(2, 1);
  inst.p = {0, 1, 1};
  inst.q = {0, 0};
  inst.u(1, 0) = 1.0;
  inst.u(2, 0) = 1.0;
  // {1}, {2} and {1,2} all earn 1/2 or 2/3; the unique optimum is {1,2}.
  CHECK(brute_force(inst).assortment == Assortment::from_indices(2, 1, {1, 2}, {}));
  inst.u(2, 0) = 0.0;
  // Product 2 adds nothing; the smaller pattern without it wins.
  CHECK(brute_force(inst).assortment == Assortment::from_indices(2, 1, {1}, {}));
}

TEST_CASE("brute_force_capacitated examples") {
  Instance inst = gen_random(3, 3, 2);
  CHECK(brute_force_capacitated(inst, 3, 3).value == brute_force(inst).value);
  CHECK(brute_force_capacitated(inst, 0, 0).value == 0.0);
  CHECK_THROWS_AS(brute_force_capacitated(inst, -1, 0), Error);

  BipartiteGraph cycle{2, 2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}};
  Instance red = reduce_bdks_capacitated(cycle, 1);
  const double g3 = 64.0;
  CHECK(brute_force_capacitated(red, 1, 1).value == doctest::Approx((1 / g3) / (1 + 1 / g3)).epsilon(1e-14));
}

TEST_CASE("brute_force_general examples") {
  Instance base = gen_random(4, 3, 9);
  CHECK(brute_force_general(GeneralPriceInstance::from_additive(base)).value ==
        doctest::Approx(brute_force(base).value).epsilon(1e-12));

  GeneralPriceInstance zero = GeneralPriceInstance::zeros(3, 3);
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) zero.u(i, j) = 1.0;
  CHECK(brute_force_general(zero).value == 0.0);

  BipartiteGraph one{1, 1, {{1, 1}}};
  Solution s = brute_force_general(reduce_bdks_generalprice(one, 1));
  CHECK(s.value == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(s.assortment == Assortment::from_indices(1, 1, {1}, {1}));
}

TEST_CASE("max_dicut_brute") {
  WeightedDigraph one{2, {{1, 2, 1}}};
  auto r = max_dicut_brute(one);
  CHECK(r.value == 1);
  CHECK(r.vertices == std::vector<int>{1});

  WeightedDigraph path{3, {{1, 2, 1}, {2, 3, 1}}};
  auto p = max_dicut_brute(path);
  CHECK(p.value == 1);
  CHECK(p.vertices == std::vector<int>{2});

  WeightedDigraph empty{4, {}};
  auto e = max_dicut_brute(empty);
  CHECK(e.value == 0);
  CHECK(e.vertices.empty());

  WeightedDigraph g{5, {{1, 2, 3}, {1, 3, 1}, {2, 4, 2}, {3, 5, 4}, {4, 5, 1}}};
  auto base = max_dicut_brute(g);
  WeightedDigraph scaled = g;
  for (auto& a : scaled.edges) a.weight *= 7;
  CHECK(max_dicut_brute(scaled).value == 7 * base.value);

  WeightedDigraph back{2, {{2, 1, 1}}};
  CHECK_THROWS_AS(max_dicut_brute(back), Error);
  WeightedDigraph zero_w{2, {{1, 2, 0}}};
  CHECK_THROWS_AS(max_dicut_brute(zero_w), Error);
}

TEST_CASE("bdks_brute") {
  BipartiteGraph k33{3, 3, {}};
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) k33.edges.emplace_back(i, j);
  CHECK(bdks_brute(k33, 2).edges == 4);

  BipartiteGraph none{3, 3, {}};
  CHECK(bdks_brute(none, 2).edges == 0);

  BipartiteGraph cycle{2, 2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}};
  CHECK(bdks_brute(cycle, 1).edges == 1);

  CHECK_THROWS_AS(bdks_brute(cycle, 3), Error);
  BipartiteGraph dup{2, 2, {{1, 1}, {1, 1}}};
  CHECK_THROWS_AS(bdks_brute(dup, 1), Error);
}

TEST_CASE("graph json") {
  WeightedDigraph g{3, {{1, 2, 4}, {2, 3, 1}}};
  WeightedDigraph back = digraph_from_json(digraph_to_json(g));
  CHECK(back.n == 3);
  REQUIRE(back.edges.size() == 2);
  CHECK(back.edges[0].weight == 4);
  CHECK_THROWS_AS(digraph_from_json(R"({"n":2,"edges":[[2,1,1]]})"), Error);

  BipartiteGraph b{2, 3, {{1, 3}, {2, 1}}};
  BipartiteGraph bb = bipartite_from_json(bipartite_to_json(b));
  CHECK(bb.left == 2);
  CHECK(bb.right == 3);
  CHECK(bb.edges == b.edges);
}
