#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "mvmnl/mvmnl.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  mvmnl_string_free(s);
  return out;
}

std::string data_file(const char* name) {
  const char* dir = std::getenv("MVMNL_DATA_DIR");
  return std::string(dir ? dir : "data") + "/" + name;
}

const char* kE1 = R"({"n":1,"m":1,"p":[3],"q":[1],"u":[[1,0],[0,2]]})";

}  // namespace

TEST_CASE("instance handles") {
  mvmnl_instance* inst = nullptr;
  REQUIRE(mvmnl_instance_from_json(kE1, &inst) == MVMNL_OK);
  int n = 0, m = 0;
  CHECK(mvmnl_instance_dims(inst, &n, &m) == MVMNL_OK);
  CHECK(n == 1);
  CHECK(m == 1);
  uint8_t x[1] = {1}, y[1] = {1};
  double rev = 0.0;
  CHECK(mvmnl_revenue(inst, x, y, &rev) == MVMNL_OK);
  CHECK(rev == doctest::Approx(8.0 / 3.0));
  char* text = nullptr;
  CHECK(mvmnl_instance_to_json(inst, &text) == MVMNL_OK);
  CHECK(take(text).find("\"u\"") != std::string::npos);
  mvmnl_instance_free(inst);
  mvmnl_instance_free(nullptr);

  mvmnl_instance* gen = nullptr;
  CHECK(mvmnl_instance_generate(4, 3, 9, nullptr, nullptr, &gen) == MVMNL_OK);
  CHECK(mvmnl_instance_dims(gen, &n, &m) == MVMNL_OK);
  CHECK(n == 4);
  CHECK(m == 3);
  mvmnl_instance_free(gen);
}

TEST_CASE("error codes") {
  mvmnl_instance* inst = nullptr;
  CHECK(mvmnl_instance_from_json("{", &inst) == MVMNL_E_PARSE);
  CHECK(std::string(mvmnl_last_error()).size() > 0);
  CHECK(inst == nullptr);
  CHECK(mvmnl_instance_from_json(R"({"n":1,"m":1,"p":[-3],"q":[1],"u":[[1,0],[0,2]]})", &inst) ==
        MVMNL_E_VALIDATION);
  CHECK(mvmnl_instance_read("/nonexistent/instance.json", &inst) == MVMNL_E_IO);
  CHECK(mvmnl_instance_from_json(nullptr, &inst) == MVMNL_E_INVALID_ARGUMENT);
  CHECK(mvmnl_instance_generate(0, 3, 1, nullptr, nullptr, &inst) == MVMNL_E_INVALID_ARGUMENT);
  CHECK(mvmnl_instance_generate(3, 3, 1, "bogus:1", nullptr, &inst) != MVMNL_OK);
  mvmnl_certificate* c = nullptr;
  CHECK(mvmnl_certificate_preset(5, &c) == MVMNL_E_UNSUPPORTED_K);
  CHECK(std::string(mvmnl_status_name(MVMNL_E_UNSUPPORTED_K)).size() > 0);

  REQUIRE(mvmnl_instance_from_json(kE1, &inst) == MVMNL_OK);
  CHECK(std::string(mvmnl_last_error()).empty());
  mvmnl_solution* sol = nullptr;
  CHECK(mvmnl_solve(inst, "nope", nullptr, &sol) == MVMNL_E_INVALID_ARGUMENT);
  mvmnl_instance_free(inst);
}

TEST_CASE("solvers") {
  mvmnl_instance* inst = nullptr;
  REQUIRE(mvmnl_instance_from_json(kE1, &inst) == MVMNL_OK);
  mvmnl_solve_options opts = mvmnl_solve_options_default();
  CHECK(opts.eps == doctest::Approx(0.1));
  for (const char* method : {"aro", "k4", "k6", "gapeps", "rr", "exact", "lp"}) {
    mvmnl_solution* sol = nullptr;
    REQUIRE(mvmnl_solve(inst, method, &opts, &sol) == MVMNL_OK);
    CHECK(mvmnl_solution_value(sol) == doctest::Approx(8.0 / 3.0));
    if (std::string(method) != "exact") {
      CHECK(mvmnl_solution_r_star(sol) == doctest::Approx(8.0 / 3.0));
      CHECK(mvmnl_solution_lp_integral(sol) == 1);
    }
    uint8_t x[1] = {0}, y[1] = {0};
    CHECK(mvmnl_solution_assortment(sol, x, y) == MVMNL_OK);
    CHECK(x[0] == 1);
    CHECK(y[0] == 1);
    char* text = nullptr;
    CHECK(mvmnl_solution_to_json(sol, &text) == MVMNL_OK);
    CHECK(take(text).find(method) != std::string::npos);
    mvmnl_solution_free(sol);
  }
  mvmnl_instance_free(inst);
}

TEST_CASE("certificates through the C API") {
  for (const char* name : {"k4.json", "k6.json"}) {
    mvmnl_certificate* c = nullptr;
    REQUIRE(mvmnl_certificate_read(data_file(name).c_str(), &c) == MVMNL_OK);
    int pass = 0;
    double ratio = 0.0;
    char* report = nullptr;
    CHECK(mvmnl_certificate_check(c, 1e-9, &pass, &ratio, &report) == MVMNL_OK);
    CHECK(pass == 1);
    CHECK(take(report).empty());
    mvmnl_certificate_free(c);
  }
  mvmnl_certificate* c4 = nullptr;
  REQUIRE(mvmnl_certificate_preset(4, &c4) == MVMNL_OK);
  int pass = 0;
  double ratio = 0.0;
  CHECK(mvmnl_certificate_check(c4, 1e-9, &pass, &ratio, nullptr) == MVMNL_OK);
  CHECK(ratio == doctest::Approx((5.0 + std::sqrt(5.0)) / 10.0).epsilon(1e-12));
  double upper = 0.0;
  CHECK(mvmnl_beta_upper_sample(c4, 2000, 1, &upper) == MVMNL_OK);
  CHECK(upper >= ratio - 1e-9);
  mvmnl_certificate_free(c4);

  mvmnl_certificate* found = nullptr;
  long points = 0;
  CHECK(mvmnl_search_thresholds(3, 0.01, &found, &ratio, &points) == MVMNL_OK);
  CHECK(points > 0);
  CHECK(ratio > 0.5);
  mvmnl_certificate_free(found);
  CHECK(mvmnl_search_thresholds(9, 0.01, &found, &ratio, &points) == MVMNL_E_UNSUPPORTED_K);
}

TEST_CASE("reductions through the C API") {
  char* inst = nullptr;
  char* rec = nullptr;
  REQUIRE(mvmnl_reduce("maxdicut", R"({"n":2,"edges":[[1,2,1]]})", 1, &inst, &rec) == MVMNL_OK);
  mvmnl_instance* h = nullptr;
  CHECK(mvmnl_instance_from_json(inst, &h) == MVMNL_OK);
  mvmnl_solution* sol = nullptr;
  CHECK(mvmnl_solve(h, "exact", nullptr, &sol) == MVMNL_OK);
  CHECK(mvmnl_solution_value(sol) == doctest::Approx(4.0));
  mvmnl_solution_free(sol);
  mvmnl_instance_free(h);
  CHECK(take(rec).find("maxdicut") != std::string::npos);
  mvmnl_string_free(inst);

  CHECK(mvmnl_reduce("gap", nullptr, 100, &inst, &rec) == MVMNL_OK);
  mvmnl_string_free(inst);
  mvmnl_string_free(rec);
  CHECK(mvmnl_reduce("maxdicut", nullptr, 1, &inst, &rec) == MVMNL_E_INVALID_ARGUMENT);
  CHECK(mvmnl_reduce("other", nullptr, 1, &inst, &rec) == MVMNL_E_INVALID_ARGUMENT);
}

TEST_CASE("bench through the C API") {
  mvmnl_bench_config cfg = mvmnl_bench_config_default();
  int sizes[] = {5};
  cfg.sizes = sizes;
  cfg.num_sizes = 1;
  cfg.replicates = 8;
  cfg.timing = 0;
  cfg.methods = "aro,k4";
  mvmnl_bench_result* r = nullptr;
  REQUIRE(mvmnl_bench_run(&cfg, &r) == MVMNL_OK);
  char* csv = nullptr;
  CHECK(mvmnl_bench_csv(r, &csv) == MVMNL_OK);
  std::string text = take(csv);
  CHECK(std::count(text.begin(), text.end(), '\n') == 9);
  char* js = nullptr;
  CHECK(mvmnl_bench_summary_json(r, &js) == MVMNL_OK);
  CHECK(take(js).find("\"5x5\"") != std::string::npos);
  mvmnl_bench_free(r);

  cfg.methods = "aro,unknown";
  CHECK(mvmnl_bench_run(&cfg, &r) == MVMNL_E_INVALID_ARGUMENT);
}
