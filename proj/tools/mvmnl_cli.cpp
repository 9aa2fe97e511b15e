#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mvmnl/mvmnl.h"

namespace {

constexpr int kUsage = 1;
constexpr int kFailure = 2;

struct Failure {
  int code;
};

void check(mvmnl_status s) {
  if (s == MVMNL_OK) return;
  std::cerr << "error: " << mvmnl_status_name(s) << ": " << mvmnl_last_error() << "\n";
  throw Failure{s == MVMNL_E_INVALID_ARGUMENT ? kUsage : kFailure};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  mvmnl_string_free(s);
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    throw Failure{kFailure};
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    throw Failure{kFailure};
  }
  out << text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Assortment optimization under the two-category multivariate MNL model"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  int gen_n = 10, gen_m = 10;
  uint64_t gen_seed = 1;
  std::string gen_pd, gen_wd, gen_out;
  gen->add_option("-n", gen_n, "Products in category 1")->check(CLI::PositiveNumber);
  gen->add_option("-m", gen_m, "Products in category 2")->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("--price-dist", gen_pd, "uniform:a:b | exp:rate | loguniform:a:b");
  gen->add_option("--weight-dist", gen_wd, "uniform:a:b | exp:rate | loguniform:a:b");
  gen->add_option("-o,--out", gen_out, "Output file (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "Solve an instance");
  std::string solve_method = "k4", solve_inst, solve_out;
  mvmnl_solve_options sopt = mvmnl_solve_options_default();
  bool solve_fallback = false;
  solve->add_option("--method", solve_method, "aro | k4 | k6 | gapeps | rr | exact | lp")
      ->check(CLI::IsMember({"aro", "k4", "k6", "gapeps", "rr", "exact", "lp"}));
  solve->add_option("--instance", solve_inst, "Instance JSON file")->required();
  solve->add_option("--eps", sopt.eps, "Block width for gapeps");
  solve->add_option("--cap", sopt.cap, "Enumeration cap for gapeps");
  solve->add_option("--seed", sopt.seed, "Seed for rr");
  solve->add_flag("--fallback", solve_fallback, "gapeps: use the K=4 candidates when the cap is exceeded");
  solve->add_option("-o,--out", solve_out, "Output file (default stdout)");

  // bench
  auto* bench = app.add_subcommand("bench", "Run the randomized benchmark");
  std::vector<int> bench_sizes{25};
  mvmnl_bench_config bcfg = mvmnl_bench_config_default();
  std::string bench_methods = "aro,k4,k6,gapeps,rr", bench_pd, bench_wd, bench_out = "bench";
  bool bench_no_timing = false;
  bench->add_option("--sizes", bench_sizes, "Instance sizes (n = m)")->delimiter(',');
  bench->add_option("--reps", bcfg.replicates, "Replicates per size")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bcfg.seed, "Master seed");
  bench->add_option("--eps", bcfg.eps, "Block width for gapeps");
  bench->add_option("--methods", bench_methods, "Comma separated: aro,k4,k6,gapeps,rr,exact");
  bench->add_option("--price-dist", bench_pd, "Price distribution");
  bench->add_option("--weight-dist", bench_wd, "Weight distribution");
  bench->add_option("--out", bench_out, "Output prefix for .csv, .summary.json and .summary.txt");
  bench->add_option("--cap", bcfg.cap, "Enumeration cap for gapeps");
  bench->add_option("--threads", bcfg.threads, "Worker threads (0 = all cores)");
  bench->add_flag("--no-timing", bench_no_timing, "Write zero times so output is reproducible byte for byte");

  // verify-certificate
  auto* verify = app.add_subcommand("verify-certificate", "Check a dual certificate file");
  std::string verify_file;
  double verify_tol = 1e-9;
  verify->add_option("file", verify_file, "Certificate JSON")->required();
  verify->add_option("--tol", verify_tol, "Slack tolerance");

  // search-thresholds
  auto* search = app.add_subcommand("search-thresholds", "Grid search over thresholds");
  int search_K = 4;
  double search_step = 0.01;
  std::string search_out;
  search->add_option("--K", search_K, "Number of blocks")->required();
  search->add_option("--step", search_step, "Grid step");
  search->add_option("-o,--out", search_out, "Write the certificate here");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Build an instance from a hardness construction");
  std::string reduce_from, reduce_graph, reduce_out, reduce_record;
  double reduce_t = 0.0, reduce_kappa = 0.0, reduce_M = 0.0;
  reduce->add_option("--from", reduce_from, "maxdicut | bdks-cap | bdks-gp | gap | aro-worst")
      ->required()
      ->check(CLI::IsMember({"maxdicut", "bdks-cap", "bdks-gp", "gap", "aro-worst"}));
  reduce->add_option("--graph", reduce_graph, "Graph JSON file");
  reduce->add_option("--t", reduce_t, "Max-DiCut threshold");
  reduce->add_option("--kappa", reduce_kappa, "Subgraph size");
  reduce->add_option("--M", reduce_M, "Scale parameter for gap and aro-worst");
  reduce->add_option("-o,--out", reduce_out, "Instance output (default stdout)");
  reduce->add_option("--record", reduce_record, "Sidecar record output (default <out>.record.json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    if (rc == 0) return 0;
    std::cerr << app.help();
    return kUsage;
  }

  try {
    if (*gen) {
      mvmnl_instance* inst = nullptr;
      check(mvmnl_instance_generate(gen_n, gen_m, gen_seed, gen_pd.c_str(), gen_wd.c_str(), &inst));
      char* text = nullptr;
      mvmnl_status s = mvmnl_instance_to_json(inst, &text);
      mvmnl_instance_free(inst);
      check(s);
      emit(take(text), gen_out);
    } else if (*solve) {
      mvmnl_instance* inst = nullptr;
      check(mvmnl_instance_read(solve_inst.c_str(), &inst));
      sopt.gapeps_fallback = solve_fallback ? 1 : 0;
      mvmnl_solution* sol = nullptr;
      mvmnl_status s = mvmnl_solve(inst, solve_method.c_str(), &sopt, &sol);
      mvmnl_instance_free(inst);
      check(s);
      char* text = nullptr;
      s = mvmnl_solution_to_json(sol, &text);
      mvmnl_solution_free(sol);
      check(s);
      emit(take(text), solve_out);
    } else if (*bench) {
      bcfg.sizes = bench_sizes.data();
      bcfg.num_sizes = bench_sizes.size();
      bcfg.methods = bench_methods.c_str();
      bcfg.price_dist = bench_pd.empty() ? nullptr : bench_pd.c_str();
      bcfg.weight_dist = bench_wd.empty() ? nullptr : bench_wd.c_str();
      bcfg.timing = bench_no_timing ? 0 : 1;
      mvmnl_bench_result* res = nullptr;
      check(mvmnl_bench_run(&bcfg, &res));
      char* table = nullptr;
      mvmnl_status s = mvmnl_bench_write(res, bench_out.c_str());
      if (s == MVMNL_OK) s = mvmnl_bench_summary_table(res, &table);
      mvmnl_bench_free(res);
      check(s);
      std::cout << take(table);
    } else if (*verify) {
      mvmnl_certificate* c = nullptr;
      check(mvmnl_certificate_read(verify_file.c_str(), &c));
      int pass = 0;
      double ratio = 0.0;
      char* report = nullptr;
      mvmnl_status s = mvmnl_certificate_check(c, verify_tol, &pass, &ratio, &report);
      mvmnl_certificate_free(c);
      check(s);
      std::string rep = take(report);
      if (pass) {
        std::printf("PASS ratio=%.6f\n", ratio);
      } else {
        std::printf("FAIL\n%s", rep.c_str());
        return kFailure;
      }
    } else if (*search) {
      mvmnl_certificate* c = nullptr;
      double ratio = 0.0;
      long points = 0;
      check(mvmnl_search_thresholds(search_K, search_step, &c, &ratio, &points));
      char* text = nullptr;
      mvmnl_status s = mvmnl_certificate_to_json(c, &text);
      if (s == MVMNL_OK && !search_out.empty()) s = mvmnl_certificate_write(c, search_out.c_str());
      mvmnl_certificate_free(c);
      check(s);
      std::printf("K=%d step=%g ratio=%.6f grid_points=%ld\n", search_K, search_step, ratio, points);
      std::cout << take(text) << "\n";
    } else if (*reduce) {
      std::string graph;
      double param = reduce_M;
      if (reduce_from == "maxdicut" || reduce_from == "bdks-cap" || reduce_from == "bdks-gp") {
        if (reduce_graph.empty()) {
          std::cerr << "error: --graph is required for " << reduce_from << "\n";
          return kUsage;
        }
        graph = slurp(reduce_graph);
        param = reduce_from == "maxdicut" ? reduce_t : reduce_kappa;
      }
      char* inst = nullptr;
      char* rec = nullptr;
      check(mvmnl_reduce(reduce_from.c_str(), graph.empty() ? nullptr : graph.c_str(), param, &inst, &rec));
      std::string inst_text = take(inst);
      std::string rec_text = take(rec);
      emit(inst_text, reduce_out);
      std::string rec_path = reduce_record;
      if (rec_path.empty() && !reduce_out.empty() && reduce_out != "-") rec_path = reduce_out + ".record.json";
      if (!rec_path.empty()) emit(rec_text, rec_path);
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return 0;
}
