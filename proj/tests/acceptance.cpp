// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mvmnl/aro.hpp"
#include "mvmnl/bench.hpp"
#include "mvmnl/exact.hpp"
#include "mvmnl/hardness.hpp"
#include "mvmnl/lp.hpp"
#include "mvmnl/partition.hpp"

using namespace mvmnl;

namespace {

const double kK4 = (5.0 + std::sqrt(5.0)) / 10.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

struct Fractional {
  Instance inst;
  ScaledLpSolution sol;
};

// Default-distribution instances, resampled until the LP optimum is fractional.
std::vector<Fractional> fractional_pool(int size, int count, uint64_t master, long* draws) {
  std::vector<Fractional> out;
  for (uint64_t k = 0; static_cast<int>(out.size()) < count; ++k) {
    Instance inst = gen_random(size, size, derive_seed(master, k));
    ScaledLpSolution sol = solve_lp(inst);
    ++*draws;
    if (!is_integral(sol)) out.push_back({std::move(inst), std::move(sol)});
  }
  return out;
}

const std::vector<Fractional>& pool20() {
  static long draws = 0;
  static std::vector<Fractional> pool = fractional_pool(20, 500, 0xacce55, &draws);
  return pool;
}

Outcome c1_c2(bool sign_pattern) {
  long failures = 0, violations = 0, halves = 0, pairs = 0;
  for (uint64_t s = 0; s < 1000; ++s) {
    Instance inst = gen_random(15, 15, derive_seed(101, s));
    ScaledLpSolution sol;
    try {
      sol = solve_lp(inst);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::VertexClassificationFailed) ++failures;
      else throw;
      continue;
    }
    if (!is_integral(sol)) ++halves;
    if (!sign_pattern) continue;
    for (size_t k = 0; k < sol.pairs.size(); ++k) {
      auto [i, j] = sol.pairs[k];
      if (sol.lx[i] != Label::Half || sol.ly[j] != Label::Half) continue;
      ++pairs;
      double price = inst.p[i] + inst.q[j];
      if (std::fabs(price - sol.r_star) <= kClassifyTol * sol.r_star) continue;
      Label want = price > sol.r_star ? Label::Half : Label::Zero;
      if (sol.lz[k] != want) ++violations;
    }
  }
  Outcome o;
  if (sign_pattern) {
    o.pass = failures == 0 && violations == 0;
    o.detail = fmt("%ld half-half pairs checked, %ld violations", pairs, violations);
  } else {
    o.pass = failures == 0;
    o.detail = fmt("1000 instances, %ld non-integral, %ld classification failures", halves, failures);
  }
  return o;
}

Outcome c3() {
  long bad_lp = 0, bad_aro = 0;
  double worst = 1.0;
  for (uint64_t s = 0; s < 500; ++s) {
    Instance inst = gen_random(7, 7, derive_seed(303, s));
    double opt = brute_force(inst).value;
    if (solve_lp(inst).r_star < opt - 1e-9) ++bad_lp;
    double a = aro_best(inst).value;
    if (a < 0.5 * opt - 1e-9) ++bad_aro;
    if (opt > 0) worst = std::min(worst, a / opt);
  }
  return {bad_lp == 0 && bad_aro == 0,
          fmt("500 instances, r* < pi*: %ld, aro < pi*/2: %ld, worst aro ratio %.4f", bad_lp, bad_aro, worst)};
}

Outcome c4() {
  ThresholdSet t4 = preset_thresholds(4), t6 = preset_thresholds(6);
  long bad4 = 0, bad6 = 0;
  double w4 = 1.0, w6 = 1.0;
  for (const auto& f : pool20()) {
    double a4 = round_best(f.inst, f.sol, t4).value / f.sol.r_star;
    double a6 = round_best(f.inst, f.sol, t6).value / f.sol.r_star;
    if (a4 * f.sol.r_star < kK4 * f.sol.r_star - 1e-9) ++bad4;
    if (a6 * f.sol.r_star < 0.74 * f.sol.r_star - 1e-9) ++bad6;
    w4 = std::min(w4, a4);
    w6 = std::min(w6, a6);
  }
  return {bad4 == 0 && bad6 == 0,
          fmt("%zu non-integral 20x20, min k4 %.4f, min k6 %.4f", pool20().size(), w4, w6)};
}

Outcome c5() {
  CertificateReport r4 = check_certificate(preset_certificate(4));
  CertificateReport r6 = check_certificate(preset_certificate(6));
  DualCertificate bumped = preset_certificate(4);
  bumped.beta_prime += 0.01;
  CertificateReport rb = check_certificate(bumped);
  bool names_9a = false;
  for (const auto& v : rb.violations) names_9a |= v.find("(9a)") != std::string::npos;
  bool ok = r4.pass && r6.pass && std::fabs(r4.certified_ratio - kK4) <= 1e-12 &&
            std::fabs(r6.certified_ratio - 0.74) <= 1e-12 && !rb.pass && names_9a;
  return {ok, fmt("k4 ratio %.10f, k6 ratio %.10f, bumped fails (9a): %s", r4.certified_ratio, r6.certified_ratio,
                  names_9a ? "yes" : "no")};
}

Outcome c6() {
  const double M = 1e4;
  Instance inst = gap_instance(M);
  ScaledLpSolution sol = solve_lp(inst);
  double opt = brute_force(inst).value;
  bool ok = sol.r_star >= 3.0 / (3.0 + 1.0 / M) - 1e-6 && opt / sol.r_star <= 0.75 + 2e-4 && !is_integral(sol);
  return {ok, fmt("r* %.8f, pi*/r* %.6f, non-integral %s", sol.r_star, opt / sol.r_star,
                  is_integral(sol) ? "no" : "yes")};
}

Outcome c7() {
  const double M = 1e6;
  Instance inst = aro_worstcase(M);
  double ratio = aro_best(inst).value / brute_force(inst).value;
  double want = (1 + 2 / M) / 2;
  return {std::fabs(ratio - want) <= 1e-9, fmt("ratio %.12f, expected %.12f", ratio, want)};
}

Outcome c8() {
  std::mt19937_64 rng(808);
  long checks = 0, bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    WeightedDigraph g;
    g.n = 2 + static_cast<int>(rng() % 6);
    for (int i = 1; i <= g.n; ++i)
      for (int j = i + 1; j <= g.n; ++j)
        if (rng() % 2) g.edges.push_back({i, j, 1 + static_cast<int64_t>(rng() % 5)});
    int64_t c = max_dicut_brute(g).value;
    for (int64_t t : {c, c + 1}) {
      if (t < 1) continue;
      DicutReduction r = reduce_max_dicut(g, t);
      bool lhs = brute_force(r.instance).value >= static_cast<double>(r.t_scaled) - 1e-9;
      bool rhs = max_dicut_brute(r.scaled_graph).value >= r.t_scaled;
      ++checks;
      if (lhs != rhs) ++bad;
    }
  }
  return {bad == 0, fmt("%ld threshold checks on 100 DAGs, %ld mismatches", checks, bad)};
}

Outcome c9() {
  std::mt19937_64 rng(909);
  long bad10 = 0, bad11 = 0, bad_gp = 0;
  for (int trial = 0; trial < 50; ++trial) {
    BipartiteGraph g{3, 3, {}};
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        if (rng() % 2) g.edges.emplace_back(i, j);
    const double g3 = std::pow(6.0, 3);
    for (int kappa : {1, 2}) {
      double e = bdks_brute(g, kappa).edges;
      Solution s = brute_force_capacitated(reduce_bdks_capacitated(g, kappa), kappa, kappa);
      if (s.value < e / (2 * g3) - 1e-15) ++bad10;
      if (s.value > e / g3 + 1e-15) ++bad11;
      double pi = brute_force_general(reduce_bdks_generalprice(g, kappa)).value;
      double k2pi = kappa * kappa * pi;
      if (e / 4.0 > k2pi + 1e-12 || k2pi > 4.0 * e + 1e-12) ++bad_gp;
    }
  }
  return {bad10 + bad11 + bad_gp == 0,
          fmt("50 graphs x 2 kappas, lower %ld, upper %ld, kappa^2 pi* %ld violations", bad10, bad11, bad_gp)};
}

Outcome c10() {
  ExperimentConfig cfg;
  cfg.sizes = {25};
  cfg.replicates = 500;
  cfg.timing = false;
  ExperimentResult res = run_experiment(cfg);
  const SizeSummary& s = res.summary.at(0);
  const MethodSummary* k4 = s.find("k4");
  const MethodSummary* ge = s.find("gapeps");
  const MethodSummary* aro = s.find("aro");
  double frac = s.non_integral_fraction;
  bool ok = s.failed_rows == 0 && frac >= 0.002 && frac <= 0.04 && k4->mean_alpha >= 0.99 &&
            k4->min_alpha >= 0.97 && ge->mean_alpha >= 0.99 && aro->mean_alpha >= 0.80 && aro->mean_alpha <= 0.96;
  return {ok, fmt("non-integral %.2f%%, k4 mean %.4f min %.4f, gapeps mean %.4f, aro mean %.4f", 100 * frac,
                  k4->mean_alpha, k4->min_alpha, ge->mean_alpha, aro->mean_alpha)};
}

Outcome c11() {
  std::mt19937_64 rng(1111);
  std::uniform_real_distribution<double> step_dist(0.005, 0.1);
  const auto& pool = pool20();
  long bad = 0, invalid = 0, tested = 0;
  double lowest = 1.0;
  for (int c = 0; c < 20; ++c) {
    int K = c % 2 ? 4 : 3;
    double step = step_dist(rng);
    SearchResult sr = grid_search_thresholds(K, step);
    CertificateReport rep = check_certificate(sr.cert);
    if (!rep.pass) {
      ++invalid;
      continue;
    }
    lowest = std::min(lowest, rep.certified_ratio);
    for (int k = 0; k < 100; ++k) {
      const Fractional& f = pool[(c * 100 + k) % pool.size()];
      double v = round_best(f.inst, f.sol, sr.cert.b).value;
      ++tested;
      if (v < (rep.certified_ratio - 1e-9) * f.sol.r_star) ++bad;
    }
  }
  return {bad == 0 && invalid == 0,
          fmt("20 certificates (lowest ratio %.4f), %ld rounds, %ld below certificate", lowest, tested, bad)};
}

Outcome c12() {
  double v = beta_upper_sample(preset_thresholds(4), 100000, 1212);
  return {v >= kK4 - 1e-9, fmt("sampled upper estimate %.6f vs certified %.6f", v, kK4)};
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Entry> all = {
      {1, "half-integral vertices", [] { return c1_c2(false); }},
      {2, "z label sign pattern", [] { return c1_c2(true); }},
      {3, "relaxation soundness and ARO half bound", c3},
      {4, "K=4 and K=6 preset rounding bounds", c4},
      {5, "preset certificates", c5},
      {6, "integrality gap family", c6},
      {7, "ARO worst case", c7},
      {8, "max-dicut reduction", c8},
      {9, "BDkS reduction inequalities", c9},
      {10, "desk-scale benchmark bands", c10},
      {11, "certificate soundness", c11},
      {12, "sandwich bound", c12},
  };
  int failed = 0;
  for (const auto& e : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %d: %s (%s) [%.1fs]\n", o.pass ? "PASS" : "FAIL", e.id, e.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
