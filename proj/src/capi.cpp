#include "mvmnl/mvmnl.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "json.hpp"
#include "mvmnl/aro.hpp"
#include "mvmnl/bench.hpp"
#include "mvmnl/exact.hpp"
#include "mvmnl/hardness.hpp"
#include "mvmnl/lp.hpp"
#include "mvmnl/partition.hpp"

struct mvmnl_instance {
  mvmnl::Instance inst;
};

struct mvmnl_solution {
  std::string method;
  mvmnl::Assortment assortment;
  double value = 0.0;
  double r_star = 0.0;
  bool lp_integral = false;
  bool has_lp = false;
  std::string extra;  // method-specific JSON object
};

struct mvmnl_certificate {
  mvmnl::DualCertificate cert;
};

struct mvmnl_bench_result {
  mvmnl::ExperimentResult res;
};

namespace {

using json = nlohmann::json;

thread_local std::string g_last_error;

mvmnl_status to_status(mvmnl::ErrorCode c) { return static_cast<mvmnl_status>(static_cast<int>(c)); }

template <class F>
mvmnl_status guard(F&& f) {
  g_last_error.clear();
  try {
    f();
    return MVMNL_OK;
  } catch (const mvmnl::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return MVMNL_E_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MVMNL_E_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw mvmnl::Error(mvmnl::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mvmnl::Distribution dist_or(const char* spec, const mvmnl::Distribution& d) {
  return spec && *spec ? mvmnl::Distribution::parse(spec) : d;
}

std::string general_instance_json(const mvmnl::GeneralPriceInstance& g) {
  json j;
  j["n"] = g.n;
  j["m"] = g.m;
  j["u"] = g.u.data();
  j["r"] = g.r.data();
  return j.dump();
}

}  // namespace

extern "C" {

const char* mvmnl_last_error(void) { return g_last_error.c_str(); }

const char* mvmnl_status_name(mvmnl_status s) {
  switch (s) {
    case MVMNL_OK:
      return "ok";
    case MVMNL_E_INVALID_ARGUMENT:
      return "invalid argument";
    case MVMNL_E_DIMENSION_MISMATCH:
      return "dimension mismatch";
    case MVMNL_E_BUDGET_EXCEEDED:
      return "budget exceeded";
    case MVMNL_E_PARSE:
      return "parse error";
    case MVMNL_E_IO:
      return "I/O error";
    case MVMNL_E_VALIDATION:
      return "validation error";
    case MVMNL_E_VERTEX_CLASSIFICATION:
      return "vertex classification failed";
    case MVMNL_E_CAP_EXCEEDED:
      return "cap exceeded";
    case MVMNL_E_UNSUPPORTED_K:
      return "unsupported K";
    case MVMNL_E_NO_CERTIFICATE:
      return "no feasible certificate";
    case MVMNL_E_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

void mvmnl_string_free(char* s) { delete[] s; }

mvmnl_status mvmnl_instance_generate(int n, int m, uint64_t seed, const char* price_dist, const char* weight_dist,
                                     mvmnl_instance** out) {
  return guard([&] {
    require(out, "out");
    auto inst = mvmnl::gen_random(n, m, seed, dist_or(price_dist, mvmnl::default_price_dist()),
                                  dist_or(weight_dist, mvmnl::default_weight_dist()));
    *out = new mvmnl_instance{std::move(inst)};
  });
}

mvmnl_status mvmnl_instance_read(const char* path, mvmnl_instance** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new mvmnl_instance{mvmnl::read_instance(path)};
  });
}

mvmnl_status mvmnl_instance_from_json(const char* text, mvmnl_instance** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new mvmnl_instance{mvmnl::instance_from_json(text)};
  });
}

mvmnl_status mvmnl_instance_write(const mvmnl_instance* inst, const char* path) {
  return guard([&] {
    require(inst, "instance");
    require(path, "path");
    mvmnl::write_instance(inst->inst, path);
  });
}

mvmnl_status mvmnl_instance_to_json(const mvmnl_instance* inst, char** out) {
  return guard([&] {
    require(inst, "instance");
    require(out, "out");
    *out = dup(mvmnl::instance_to_json(inst->inst));
  });
}

mvmnl_status mvmnl_instance_dims(const mvmnl_instance* inst, int* n, int* m) {
  return guard([&] {
    require(inst, "instance");
    if (n) *n = inst->inst.n;
    if (m) *m = inst->inst.m;
  });
}

mvmnl_status mvmnl_revenue(const mvmnl_instance* inst, const uint8_t* x, const uint8_t* y, double* out) {
  return guard([&] {
    require(inst, "instance");
    require(x, "x");
    require(y, "y");
    require(out, "out");
    mvmnl::Assortment a;
    a.x.assign(x, x + inst->inst.n);
    a.y.assign(y, y + inst->inst.m);
    *out = mvmnl::revenue(inst->inst, a);
  });
}

void mvmnl_instance_free(mvmnl_instance* inst) { delete inst; }

mvmnl_solve_options mvmnl_solve_options_default(void) {
  mvmnl_solve_options o;
  o.eps = 0.1;
  o.cap = 0;
  o.seed = 1;
  o.gapeps_fallback = 0;
  return o;
}

mvmnl_status mvmnl_solve(const mvmnl_instance* inst, const char* method, const mvmnl_solve_options* opts,
                         mvmnl_solution** out) {
  return guard([&] {
    require(inst, "instance");
    require(method, "method");
    require(out, "out");
    const mvmnl::Instance& I = inst->inst;
    mvmnl_solve_options o = opts ? *opts : mvmnl_solve_options_default();
    auto s = std::make_unique<mvmnl_solution>();
    s->method = method;
    const std::string m = method;
    json extra = json::object();
    auto with_lp = [&]() {
      auto sol = mvmnl::solve_lp(I);
      s->has_lp = true;
      s->r_star = sol.r_star;
      s->lp_integral = mvmnl::is_integral(sol);
      return sol;
    };
    if (m == "aro") {
      auto r = mvmnl::aro_best(I);
      s->assortment = r.assortment;
      s->value = r.value;
      extra["pi_p"] = r.pi_p;
      extra["pi_q"] = r.pi_q;
      extra["zeroed"] = r.which == mvmnl::ZeroedCategory::ZeroQ ? "q" : "p";
      with_lp();
    } else if (m == "k4" || m == "k6") {
      auto sol = with_lp();
      auto r = mvmnl::round_best(I, sol, mvmnl::preset_thresholds(m == "k4" ? 4 : 6));
      s->assortment = r.assortment;
      s->value = r.value;
      extra["candidate"] = r.k;
    } else if (m == "gapeps") {
      auto sol = with_lp();
      try {
        auto r = mvmnl::gap_eps_solve(I, sol, o.eps, o.cap ? o.cap : mvmnl::kDefaultGapEpsCap);
        s->assortment = r.assortment;
        s->value = r.value;
        extra["bits"] = r.bits;
        extra["evaluated"] = r.evaluated;
        extra["rule_conflicts"] = r.rule_conflicts;
      } catch (const mvmnl::Error& e) {
        if (e.code() != mvmnl::ErrorCode::CapExceeded || !o.gapeps_fallback) throw;
        auto r = mvmnl::round_best(I, sol, mvmnl::preset_thresholds(4));
        s->assortment = r.assortment;
        s->value = r.value;
        extra["fallback"] = "k4";
      }
    } else if (m == "rr") {
      auto sol = with_lp();
      s->assortment = mvmnl::random_round(sol, o.seed);
      s->value = mvmnl::revenue(I, s->assortment);
      extra["seed"] = o.seed;
    } else if (m == "exact") {
      auto r = mvmnl::brute_force(I);
      s->assortment = r.assortment;
      s->value = r.value;
    } else if (m == "lp") {
      auto sol = with_lp();
      s->assortment = mvmnl::support(sol);
      s->value = mvmnl::revenue(I, s->assortment);
      extra["lp"] = json::parse(sol.to_json());
    } else {
      throw mvmnl::Error(mvmnl::ErrorCode::InvalidArgument, "unknown method " + m);
    }
    s->extra = extra.dump();
    *out = s.release();
  });
}

double mvmnl_solution_value(const mvmnl_solution* s) { return s ? s->value : 0.0; }
double mvmnl_solution_r_star(const mvmnl_solution* s) { return s ? s->r_star : 0.0; }
int mvmnl_solution_lp_integral(const mvmnl_solution* s) { return s && s->lp_integral ? 1 : 0; }

mvmnl_status mvmnl_solution_assortment(const mvmnl_solution* s, uint8_t* x, uint8_t* y) {
  return guard([&] {
    require(s, "solution");
    if (x) std::copy(s->assortment.x.begin(), s->assortment.x.end(), x);
    if (y) std::copy(s->assortment.y.begin(), s->assortment.y.end(), y);
  });
}

mvmnl_status mvmnl_solution_to_json(const mvmnl_solution* s, char** out) {
  return guard([&] {
    require(s, "solution");
    require(out, "out");
    json j;
    j["method"] = s->method;
    j["assortment"] = json::parse(mvmnl::assortment_to_json(s->assortment));
    j["value"] = s->value;
    if (s->has_lp) {
      j["r_star"] = s->r_star;
      j["alpha"] = s->r_star > 0.0 ? s->value / s->r_star : 1.0;
      j["lp_integral"] = s->lp_integral;
    }
    json extra = json::parse(s->extra);
    for (auto& [k, v] : extra.items()) j[k] = v;
    *out = dup(j.dump(1));
  });
}

void mvmnl_solution_free(mvmnl_solution* s) { delete s; }

mvmnl_status mvmnl_certificate_preset(int K, mvmnl_certificate** out) {
  return guard([&] {
    require(out, "out");
    *out = new mvmnl_certificate{mvmnl::preset_certificate(K)};
  });
}

mvmnl_status mvmnl_certificate_read(const char* path, mvmnl_certificate** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new mvmnl_certificate{mvmnl::read_certificate(path)};
  });
}

mvmnl_status mvmnl_certificate_write(const mvmnl_certificate* c, const char* path) {
  return guard([&] {
    require(c, "certificate");
    require(path, "path");
    mvmnl::write_certificate(c->cert, path);
  });
}

mvmnl_status mvmnl_certificate_to_json(const mvmnl_certificate* c, char** out) {
  return guard([&] {
    require(c, "certificate");
    require(out, "out");
    *out = dup(mvmnl::certificate_to_json(c->cert));
  });
}

mvmnl_status mvmnl_certificate_check(const mvmnl_certificate* c, double tol, int* pass, double* ratio,
                                     char** report) {
  return guard([&] {
    require(c, "certificate");
    auto rep = mvmnl::check_certificate(c->cert, tol);
    if (pass) *pass = rep.pass ? 1 : 0;
    if (ratio) *ratio = rep.certified_ratio;
    if (report) {
      std::ostringstream os;
      for (const auto& v : rep.violations) os << v << "\n";
      *report = dup(os.str());
    }
  });
}

mvmnl_status mvmnl_search_thresholds(int K, double step, mvmnl_certificate** out, double* ratio,
                                     long* grid_points) {
  return guard([&] {
    require(out, "out");
    auto r = mvmnl::grid_search_thresholds(K, step);
    if (ratio) *ratio = r.ratio;
    if (grid_points) *grid_points = r.grid_points;
    *out = new mvmnl_certificate{r.cert};
  });
}

mvmnl_status mvmnl_beta_upper_sample(const mvmnl_certificate* c, long samples, uint64_t seed, double* out) {
  return guard([&] {
    require(c, "certificate");
    require(out, "out");
    if (samples < 1) throw mvmnl::Error(mvmnl::ErrorCode::InvalidArgument, "samples must be positive");
    *out = mvmnl::beta_upper_sample(c->cert.b, samples, seed);
  });
}

void mvmnl_certificate_free(mvmnl_certificate* c) { delete c; }

mvmnl_status mvmnl_reduce(const char* from, const char* graph_json, double param, char** instance_json,
                          char** record_json) {
  return guard([&] {
    require(from, "from");
    require(instance_json, "instance_json");
    const std::string f = from;
    json rec;
    rec["reduction"] = f;
    std::string inst_text;
    auto need_graph = [&] {
      if (!graph_json) throw mvmnl::Error(mvmnl::ErrorCode::InvalidArgument, f + " needs a graph");
    };
    auto as_int = [&](const char* what) {
      if (!(param >= 1.0) || param != static_cast<double>(static_cast<int64_t>(param)))
        throw mvmnl::Error(mvmnl::ErrorCode::InvalidArgument, std::string(what) + " must be a positive integer");
      return static_cast<int64_t>(param);
    };
    if (f == "maxdicut") {
      need_graph();
      auto g = mvmnl::digraph_from_json(graph_json);
      auto r = mvmnl::dicut_record(g, as_int("t"));
      inst_text = mvmnl::instance_to_json(r.instance);
      rec = json::parse(r.to_json());
    } else if (f == "bdks-cap") {
      need_graph();
      auto g = mvmnl::bipartite_from_json(graph_json);
      int k = static_cast<int>(as_int("kappa"));
      inst_text = mvmnl::instance_to_json(mvmnl::reduce_bdks_capacitated(g, k));
      rec["source"] = json::parse(mvmnl::bipartite_to_json(g));
      rec["K1"] = k;
      rec["K2"] = k;
      rec["g"] = g.left + g.right;
    } else if (f == "bdks-gp") {
      need_graph();
      auto g = mvmnl::bipartite_from_json(graph_json);
      int k = static_cast<int>(as_int("kappa"));
      inst_text = general_instance_json(mvmnl::reduce_bdks_generalprice(g, k));
      rec["source"] = json::parse(mvmnl::bipartite_to_json(g));
      rec["kappa"] = k;
      rec["general_price"] = true;
    } else if (f == "gap") {
      inst_text = mvmnl::instance_to_json(mvmnl::gap_instance(param));
      rec["M"] = param;
    } else if (f == "aro-worst") {
      inst_text = mvmnl::instance_to_json(mvmnl::aro_worstcase(param));
      rec["M"] = param;
      rec["eps"] = 2.0 / param;
    } else {
      throw mvmnl::Error(mvmnl::ErrorCode::InvalidArgument, "unknown reduction " + f);
    }
    *instance_json = dup(inst_text);
    if (record_json) *record_json = dup(rec.dump(1));
  });
}

mvmnl_bench_config mvmnl_bench_config_default(void) {
  mvmnl_bench_config c;
  static const int kSizes[1] = {25};
  c.sizes = kSizes;
  c.num_sizes = 1;
  c.replicates = 500;
  c.seed = 1;
  c.eps = 0.1;
  c.methods = nullptr;
  c.price_dist = nullptr;
  c.weight_dist = nullptr;
  c.cap = 0;
  c.threads = 0;
  c.timing = 1;
  return c;
}

mvmnl_status mvmnl_bench_run(const mvmnl_bench_config* cfg, mvmnl_bench_result** out) {
  return guard([&] {
    require(cfg, "config");
    require(out, "out");
    mvmnl::ExperimentConfig c;
    if (cfg->num_sizes > 0) {
      require(cfg->sizes, "sizes");
      c.sizes.assign(cfg->sizes, cfg->sizes + cfg->num_sizes);
    } else {
      c.sizes.clear();
    }
    c.replicates = cfg->replicates;
    c.seed = cfg->seed;
    c.eps = cfg->eps;
    if (cfg->methods && *cfg->methods) {
      c.methods.clear();
      std::stringstream ss(cfg->methods);
      std::string item;
      while (std::getline(ss, item, ','))
        if (!item.empty()) c.methods.push_back(item);
    }
    c.price_dist = dist_or(cfg->price_dist, c.price_dist);
    c.weight_dist = dist_or(cfg->weight_dist, c.weight_dist);
    if (cfg->cap) c.gapeps_cap = cfg->cap;
    c.threads = cfg->threads;
    c.timing = cfg->timing != 0;
    *out = new mvmnl_bench_result{mvmnl::run_experiment(c)};
  });
}

mvmnl_status mvmnl_bench_write(const mvmnl_bench_result* r, const char* prefix) {
  return guard([&] {
    require(r, "result");
    require(prefix, "prefix");
    mvmnl::write_results(r->res, prefix);
  });
}

mvmnl_status mvmnl_bench_csv(const mvmnl_bench_result* r, char** out) {
  return guard([&] {
    require(r, "result");
    require(out, "out");
    *out = dup(mvmnl::results_csv(r->res.config, r->res.rows));
  });
}

mvmnl_status mvmnl_bench_summary_json(const mvmnl_bench_result* r, char** out) {
  return guard([&] {
    require(r, "result");
    require(out, "out");
    *out = dup(mvmnl::summary_json(r->res));
  });
}

mvmnl_status mvmnl_bench_summary_table(const mvmnl_bench_result* r, char** out) {
  return guard([&] {
    require(r, "result");
    require(out, "out");
    *out = dup(mvmnl::summary_table(r->res));
  });
}

void mvmnl_bench_free(mvmnl_bench_result* r) { delete r; }

}  // extern "C"
