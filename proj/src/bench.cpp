#include "mvmnl/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "mvmnl/aro.hpp"
#include "mvmnl/exact.hpp"
#include "mvmnl/lp.hpp"

namespace mvmnl {

using json = nlohmann::json;

namespace {

const std::set<std::string> kKnownMethods{"aro", "k4", "k6", "gapeps", "rr", "exact"};

bool lp_based(const std::string& m) { return m == "k4" || m == "k6" || m == "gapeps" || m == "rr"; }

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string row_error_field(const std::string& s) {
  std::string out = s;
  std::replace(out.begin(), out.end(), ',', ';');
  std::replace(out.begin(), out.end(), '\n', ' ');
  return out;
}

MethodOutcome run_method(const std::string& method, const Instance& inst, const ScaledLpSolution& sol,
                         const ExperimentConfig& cfg, uint64_t seed) {
  MethodOutcome out;
  auto t0 = std::chrono::steady_clock::now();
  try {
    if (method == "aro") {
      out.value = aro_best(inst).value;
    } else if (method == "k4" || method == "k6") {
      out.value = round_best(inst, sol, preset_thresholds(method == "k4" ? 4 : 6)).value;
    } else if (method == "gapeps") {
      try {
        out.value = gap_eps_solve(inst, sol, cfg.eps, cfg.gapeps_cap).value;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::CapExceeded) throw;
        out.value = round_best(inst, sol, preset_thresholds(4)).value;
        out.fallback = true;
      }
    } else if (method == "rr") {
      out.value = revenue(inst, random_round(sol, derive_seed(seed, 0x7272)));
    } else if (method == "exact") {
      out.value = brute_force(inst).value;
    }
    out.ok = true;
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  if (cfg.timing) out.seconds = std::chrono::duration<double>(t1 - t0).count();
  out.alpha = sol.r_star > 0.0 ? out.value / sol.r_star : 1.0;
  return out;
}

ResultRow run_row(const ExperimentConfig& cfg, int size, int rep) {
  ResultRow row;
  row.size = size;
  row.replicate = rep;
  row.n = row.m = size;
  row.seed = derive_seed(cfg.seed, (static_cast<uint64_t>(size) << 32) | static_cast<uint64_t>(rep));
  row.instance_id = "n" + std::to_string(size) + "_r" + std::to_string(rep);
  row.methods.resize(cfg.methods.size());
  try {
    Instance inst = gen_random(size, size, row.seed, cfg.price_dist, cfg.weight_dist);
    ScaledLpSolution sol = solve_lp(inst);
    row.r_star = sol.r_star;
    row.lp_integral = is_integral(sol);
    for (size_t k = 0; k < cfg.methods.size(); ++k)
      row.methods[k] = run_method(cfg.methods[k], inst, sol, cfg, row.seed);
    row.ok = true;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.sizes.empty()) throw Error(ErrorCode::InvalidArgument, "no sizes given");
  for (int s : cfg.sizes)
    if (s < 1) throw Error(ErrorCode::InvalidArgument, "sizes must be positive");
  if (cfg.replicates < 1) throw Error(ErrorCode::InvalidArgument, "replicates must be at least 1");
  if (!(cfg.eps > 0.0) || cfg.eps > 1.0) throw Error(ErrorCode::InvalidArgument, "eps must lie in (0,1]");
  double K = 1.0 / cfg.eps;
  if (std::fabs(K - std::round(K)) > 1e-9) throw Error(ErrorCode::InvalidArgument, "1/eps must be an integer");
  for (const auto& m : cfg.methods)
    if (!kKnownMethods.count(m)) throw Error(ErrorCode::InvalidArgument, "unknown method " + m);
}

const MethodSummary* SizeSummary::find(const std::string& method) const {
  for (const auto& m : methods)
    if (m.method == method) return &m;
  return nullptr;
}

std::vector<SizeSummary> summarize(const ExperimentConfig& cfg, const std::vector<ResultRow>& rows) {
  std::vector<SizeSummary> out;
  for (int size : cfg.sizes) {
    SizeSummary s;
    s.size = size;
    for (const auto& name : cfg.methods) {
      MethodSummary ms;
      ms.method = name;
      ms.min_alpha = std::numeric_limits<double>::infinity();
      s.methods.push_back(ms);
    }
    std::vector<double> time_sum(cfg.methods.size(), 0.0);
    std::vector<long> time_n(cfg.methods.size(), 0);
    for (const auto& r : rows) {
      if (r.size != size) continue;
      ++s.rows;
      if (!r.ok) {
        ++s.failed_rows;
        continue;
      }
      if (!r.lp_integral) ++s.non_integral;
      for (size_t k = 0; k < cfg.methods.size(); ++k) {
        const auto& mo = r.methods[k];
        auto& ms = s.methods[k];
        if (!mo.ok) {
          ++ms.failures;
          continue;
        }
        if (mo.fallback) ++ms.fallbacks;
        time_sum[k] += mo.seconds;
        ++time_n[k];
        if (lp_based(ms.method) && r.lp_integral) continue;
        ++ms.count;
        ms.mean_alpha += mo.alpha;
        ms.min_alpha = std::min(ms.min_alpha, mo.alpha);
      }
    }
    long good = s.rows - s.failed_rows;
    s.non_integral_fraction = good > 0 ? static_cast<double>(s.non_integral) / good : 0.0;
    for (size_t k = 0; k < s.methods.size(); ++k) {
      auto& ms = s.methods[k];
      if (ms.count > 0) {
        ms.mean_alpha /= ms.count;
      } else {
        ms.mean_alpha = std::nan("");
        ms.min_alpha = std::nan("");
      }
      ms.mean_seconds = time_n[k] > 0 ? time_sum[k] / time_n[k] : 0.0;
    }
    out.push_back(s);
  }
  return out;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  validate_config(cfg);
  std::vector<std::pair<int, int>> jobs;
  for (int s : cfg.sizes)
    for (int r = 0; r < cfg.replicates; ++r) jobs.emplace_back(s, r);
  std::vector<ResultRow> rows(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k = next++; k < jobs.size(); k = next++) rows[k] = run_row(cfg, jobs[k].first, jobs[k].second);
  };
  unsigned nt = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads) : std::max(1u, std::thread::hardware_concurrency());
  nt = std::min<unsigned>(nt, static_cast<unsigned>(jobs.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nt; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  ExperimentResult res;
  res.config = cfg;
  res.rows = std::move(rows);
  res.summary = summarize(cfg, res.rows);
  return res;
}

std::string results_csv(const ExperimentConfig& cfg, const std::vector<ResultRow>& rows) {
  std::ostringstream os;
  os << "instance_id,n,m,seed,r_star,lp_integral";
  for (const auto& m : cfg.methods) os << ",value_" << m << ",alpha_" << m << ",time_" << m;
  os << ",error\n";
  for (const auto& r : rows) {
    os << r.instance_id << "," << r.n << "," << r.m << "," << r.seed << "," << fmt(r.r_star) << ","
       << (r.lp_integral ? 1 : 0);
    std::string err = r.error;
    for (size_t k = 0; k < cfg.methods.size(); ++k) {
      const MethodOutcome& mo = k < r.methods.size() ? r.methods[k] : MethodOutcome{};
      if (mo.ok)
        os << "," << fmt(mo.value) << "," << fmt(mo.alpha) << "," << fmt(mo.seconds);
      else
        os << ",,,";
      if (!mo.error.empty()) err += (err.empty() ? "" : "; ") + cfg.methods[k] + ": " + mo.error;
      if (mo.fallback) err += (err.empty() ? "" : "; ") + cfg.methods[k] + ": cap fallback";
    }
    os << "," << row_error_field(err) << "\n";
  }
  return os.str();
}

std::string summary_json(const ExperimentResult& res) {
  json j;
  j["seed"] = res.config.seed;
  j["replicates"] = res.config.replicates;
  j["eps"] = res.config.eps;
  j["price_dist"] = res.config.price_dist.str();
  j["weight_dist"] = res.config.weight_dist.str();
  json sizes = json::object();
  auto num = [](double v) { return std::isfinite(v) ? json(v) : json(nullptr); };
  for (const auto& s : res.summary) {
    json b;
    b["rows"] = s.rows;
    b["failed_rows"] = s.failed_rows;
    b["non_integral"] = s.non_integral;
    b["non_integral_fraction"] = s.non_integral_fraction;
    json ms = json::object();
    for (const auto& m : s.methods) {
      ms[m.method] = {{"count", m.count},
                      {"mean_alpha", num(m.mean_alpha)},
                      {"min_alpha", num(m.min_alpha)},
                      {"mean_seconds", m.mean_seconds},
                      {"failures", m.failures},
                      {"fallbacks", m.fallbacks}};
    }
    b["methods"] = ms;
    sizes[std::to_string(s.size) + "x" + std::to_string(s.size)] = b;
  }
  j["sizes"] = sizes;
  return j.dump(1);
}

std::string summary_table(const ExperimentResult& res) {
  std::ostringstream os;
  char buf[256];
  for (const auto& s : res.summary) {
    std::snprintf(buf, sizeof buf, "size %dx%d  rows %ld  non-integral %ld (%.2f%%)  failed %ld\n", s.size, s.size,
                  s.rows, s.non_integral, 100.0 * s.non_integral_fraction, s.failed_rows);
    os << buf;
    std::snprintf(buf, sizeof buf, "  %-8s %6s %10s %10s %12s\n", "method", "count", "mean_a", "min_a", "mean_time");
    os << buf;
    for (const auto& m : s.methods) {
      std::snprintf(buf, sizeof buf, "  %-8s %6ld %10.4f %10.4f %12.6f\n", m.method.c_str(), m.count, m.mean_alpha,
                    m.min_alpha, m.mean_seconds);
      os << buf;
    }
  }
  return os.str();
}

void write_results(const ExperimentResult& res, const std::string& prefix) {
  auto put = [](const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
    out << text;
    if (!out) throw Error(ErrorCode::Io, "write failed for " + path);
  };
  put(prefix + ".csv", results_csv(res.config, res.rows));
  put(prefix + ".summary.json", summary_json(res) + "\n");
  put(prefix + ".summary.txt", summary_table(res));
}

std::vector<ResultRow> read_results_csv(const std::string& path, std::vector<std::string>* methods) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  auto split = [](const std::string& line) {
    std::vector<std::string> f;
    std::string cur;
    std::istringstream ss(line);
    while (std::getline(ss, cur, ',')) f.push_back(cur);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    return f;
  };
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::Parse, path + ": empty file");
  auto header = split(line);
  if (header.size() < 7 || (header.size() - 7) % 3 != 0) throw Error(ErrorCode::Parse, path + ": bad header");
  std::vector<std::string> names;
  for (size_t k = 6; k + 1 < header.size(); k += 3) names.push_back(header[k].substr(6));
  if (methods) *methods = names;
  std::vector<ResultRow> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    auto f = split(line);
    if (f.size() != header.size()) throw Error(ErrorCode::Parse, path + ": wrong field count on line " + std::to_string(lineno));
    ResultRow r;
    try {
      r.instance_id = f[0];
      r.n = std::stoi(f[1]);
      r.m = std::stoi(f[2]);
      r.size = r.n;
      r.seed = std::stoull(f[3]);
      r.r_star = std::stod(f[4]);
      r.lp_integral = f[5] == "1";
      for (size_t k = 0; k < names.size(); ++k) {
        MethodOutcome mo;
        const std::string& v = f[6 + 3 * k];
        if (!v.empty()) {
          mo.ok = true;
          mo.value = std::stod(v);
          mo.alpha = std::stod(f[7 + 3 * k]);
          mo.seconds = std::stod(f[8 + 3 * k]);
        }
        r.methods.push_back(mo);
      }
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::Parse, path + ": bad number on line " + std::to_string(lineno));
    }
    r.error = f.back();
    r.ok = true;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace mvmnl
