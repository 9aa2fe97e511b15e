#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "json.hpp"
#include "mvmnl/partition.hpp"

namespace mvmnl {

using json = nlohmann::json;

namespace {

enum class Kind { SumAll, PrefixJ, SuffixI, A, B, C, D };

// c0 + alpha * (v_lo + ... + v_hi); an empty range sums to 0.
struct Cons {
  Kind kind;
  int I;
  int J;
  double c0;
  double alpha;
  int lo;
  int hi;
};

template <class F>
void for_each_constraint(int K, double beta, const ThresholdSet& t, F&& f) {
  f(Cons{Kind::SumAll, 0, 0, -2.0, 1.0, 1, K});
  for (int J = 1; J <= K; ++J) f(Cons{Kind::PrefixJ, 0, J, -1.0, 1.0, 1, K + 1 - J});
  for (int I = 1; I <= K; ++I) f(Cons{Kind::SuffixI, I, 0, -1.0, 1.0, I, K});
  f(Cons{Kind::A, 0, 0, 2.0, -beta, 1, K});
  for (int J = 1; J <= K; ++J) {
    double b = t.at(J);
    f(Cons{Kind::B, 0, J, 1.0 - b, b - beta, 1, K + 1 - J});
  }
  for (int I = 1; I <= K; ++I) {
    double b = t.at(I);
    f(Cons{Kind::C, I, 0, 1.0 - b, b - beta, I, K});
  }
  // min over R in [lo, hi] of (1 - R) + (R - beta) S is attained at an endpoint,
  // so the piecewise form splits into two linear inequalities.
  for (int I = 2; I <= K; ++I)
    for (int J = 2; J <= K; ++J) {
      double hi = t.at(I - 1) + t.at(J - 1);
      double lo = t.at(I) + t.at(J);
      f(Cons{Kind::D, I, J, 1.0 - hi, hi - beta, I, K + 1 - J});
      f(Cons{Kind::D, I, J, 1.0 - lo, lo - beta, I, K + 1 - J});
    }
}

std::string cons_name(const Cons& c) {
  switch (c.kind) {
    case Kind::SumAll:
      return "(8) sum v >= 2";
    case Kind::PrefixJ:
      return "(8) prefix sum for J=" + std::to_string(c.J);
    case Kind::SuffixI:
      return "(8) suffix sum for I=" + std::to_string(c.I);
    case Kind::A:
      return "(9a)";
    case Kind::B:
      return "(9b) J=" + std::to_string(c.J);
    case Kind::C:
      return "(9c) I=" + std::to_string(c.I);
    case Kind::D:
      return "(9d) I=" + std::to_string(c.I) + " J=" + std::to_string(c.J);
  }
  return "?";
}

double range_sum(const std::vector<double>& prefix, int lo, int hi) {
  if (lo > hi) return 0.0;
  return prefix[hi] - prefix[lo - 1];
}

std::vector<double> prefix_of(const std::vector<double>& v) {
  std::vector<double> p(v.size() + 1, 0.0);
  for (size_t k = 0; k < v.size(); ++k) p[k + 1] = p[k] + v[k];
  return p;
}

}  // namespace

double threshold_ratio(const ThresholdSet& t) {
  double worst = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= t.K; ++k) worst = std::min(worst, t.at(k) + t.at(t.K + 1 - k));
  return worst;
}

CertificateReport check_certificate(const DualCertificate& c, double tol) {
  CertificateReport rep;
  rep.min_slack = std::numeric_limits<double>::infinity();
  if (c.K < 1 || static_cast<int>(c.v.size()) != c.K || c.b.K != c.K) {
    rep.violations.push_back("structure: K, b and v sizes disagree");
    return rep;
  }
  for (const auto& s : threshold_violations(c.b, tol)) rep.violations.push_back("thresholds: " + s);
  if (!(c.beta_prime > 0.0 && c.beta_prime < 1.0)) rep.violations.push_back("beta_prime outside (0,1)");
  bool nonzero = false;
  for (int k = 1; k <= c.K; ++k) {
    if (c.v[k - 1] < -tol) rep.violations.push_back("v_" + std::to_string(k) + " negative");
    if (c.v[k - 1] > 0.0) nonzero = true;
  }
  if (!nonzero) rep.violations.push_back("v is zero");
  auto prefix = prefix_of(c.v);
  for_each_constraint(c.K, c.beta_prime, c.b, [&](const Cons& k) {
    double val = k.c0 + k.alpha * range_sum(prefix, k.lo, k.hi);
    rep.min_slack = std::min(rep.min_slack, val);
    if (val < -tol) {
      std::ostringstream os;
      os << cons_name(k) << " slack " << val;
      rep.violations.push_back(os.str());
    }
  });
  rep.pass = rep.violations.empty();
  if (rep.pass) rep.certified_ratio = std::min(c.beta_prime, threshold_ratio(c.b));
  return rep;
}

DualCertificate preset_certificate(int K) {
  DualCertificate c;
  c.K = K;
  c.b.K = K;
  if (K == 4) {
    const double s5 = std::sqrt(5.0);
    c.beta_prime = (5.0 + s5) / 10.0;
    c.b.b = {(5.0 + s5) / 10.0, s5 / 5.0, (5.0 - s5) / 10.0, 0.0};
    const double v2 = (3.0 - s5) / 2.0;
    c.v = {1.0, v2, v2, 1.0};
  } else if (K == 6) {
    c.beta_prime = 0.74;
    c.b.b = {0.74, 0.484, 0.399, 0.341, 0.256, 0.0};
    c.v = {1.0, 0.23772, 0.11264, 0.11264, 0.23772, 1.0};
  } else {
    throw Error(ErrorCode::UnsupportedK, "preset thresholds exist only for K=4 and K=6");
  }
  return c;
}

ThresholdSet preset_thresholds(int K) { return preset_certificate(K).b; }

std::string certificate_to_json(const DualCertificate& c) {
  json j;
  j["K"] = c.K;
  j["beta_prime"] = c.beta_prime;
  j["b"] = c.b.b;
  j["v"] = c.v;
  return j.dump(1);
}

DualCertificate certificate_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("certificate JSON: ") + e.what());
  }
  for (const char* f : {"K", "beta_prime", "b", "v"})
    if (!j.contains(f)) throw Error(ErrorCode::Parse, std::string("certificate missing field \"") + f + "\"");
  DualCertificate c;
  try {
    c.K = j["K"].get<int>();
    c.beta_prime = j["beta_prime"].get<double>();
    c.b.K = c.K;
    c.b.b = j["b"].get<std::vector<double>>();
    c.v = j["v"].get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("certificate JSON: ") + e.what());
  }
  return c;
}

DualCertificate read_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return certificate_from_json(ss.str());
}

void write_certificate(const DualCertificate& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << certificate_to_json(c) << "\n";
}

namespace {

// v = base + t * dir following the symmetric recipe with v_1 = v_K = 1 and 2 - beta sum(v) = 0.
struct Recipe {
  std::vector<double> base;
  std::vector<double> dir;
  bool free = false;
};

Recipe recipe(int K, double beta) {
  Recipe r;
  r.base.assign(K, 0.0);
  r.dir.assign(K, 0.0);
  r.base[0] = r.base[K - 1] = 1.0;
  const double rest = 2.0 / beta - 2.0;
  switch (K) {
    case 2:
      break;
    case 3:
      r.base[1] = rest;
      break;
    case 4:
      r.base[1] = r.base[2] = rest / 2.0;
      break;
    case 5:
      r.base[2] = rest;
      r.dir[1] = r.dir[3] = 1.0;
      r.dir[2] = -2.0;
      r.free = true;
      break;
    case 6:
      r.base[2] = r.base[3] = rest / 2.0;
      r.dir[1] = r.dir[4] = 1.0;
      r.dir[2] = r.dir[3] = -1.0;
      r.free = true;
      break;
    default:
      throw Error(ErrorCode::UnsupportedK, "threshold search supports K in 2..6");
  }
  return r;
}

// Finds v on the recipe line satisfying every inequality at this beta, or returns false.
bool feasible_v(int K, double beta, const ThresholdSet& t, std::vector<double>& v_out) {
  Recipe r = recipe(K, beta);
  auto pb = prefix_of(r.base);
  auto pd = prefix_of(r.dir);
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool ok = true;
  auto add = [&](double c, double g) {
    if (std::fabs(g) < 1e-15) {
      if (c < 0.0) ok = false;
    } else if (g > 0.0) {
      lo = std::max(lo, -c / g);
    } else {
      hi = std::min(hi, -c / g);
    }
  };
  for (int k = 0; k < K; ++k) add(r.base[k], r.dir[k]);
  for_each_constraint(K, beta, t, [&](const Cons& c) {
    if (!ok) return;
    add(c.c0 + c.alpha * range_sum(pb, c.lo, c.hi), c.alpha * range_sum(pd, c.lo, c.hi));
  });
  if (!ok || lo > hi) return false;
  double tv = 0.0;
  if (r.free) {
    if (std::isfinite(lo) && std::isfinite(hi))
      tv = 0.5 * (lo + hi);
    else if (std::isfinite(lo))
      tv = lo;
    else if (std::isfinite(hi))
      tv = hi;
  }
  v_out.resize(K);
  for (int k = 0; k < K; ++k) v_out[k] = std::max(0.0, r.base[k] + tv * r.dir[k]);
  return true;
}

struct SearchState {
  int K;
  int N;
  double step;
  double best = 0.0;
  DualCertificate cert;
  bool found = false;
  long points = 0;
  std::vector<int> a;
};

void evaluate_point(SearchState& st) {
  ++st.points;
  ThresholdSet t;
  t.K = st.K;
  t.b.resize(st.K);
  for (int k = 0; k < st.K - 1; ++k) t.b[k] = st.a[k] * st.step;
  t.b[st.K - 1] = 0.0;
  const double b1 = t.b[0];
  const double cap = std::min(threshold_ratio(t), 2.0 * b1 / (1.0 + b1));
  const double margin = 1e-10;
  if (cap <= st.best + margin) return;
  std::vector<double> v;
  double lo = st.found ? st.best + margin : 1e-6;
  if (!feasible_v(st.K, lo, t, v)) return;
  double hi = cap;
  std::vector<double> vh;
  if (feasible_v(st.K, hi, t, vh)) {
    lo = hi;
    v = vh;
  } else {
    for (int it = 0; it < 60 && hi - lo > 1e-13; ++it) {
      double mid = 0.5 * (lo + hi);
      std::vector<double> vm;
      if (feasible_v(st.K, mid, t, vm)) {
        lo = mid;
        v = vm;
      } else {
        hi = mid;
      }
    }
  }
  DualCertificate c;
  c.K = st.K;
  c.beta_prime = lo;
  c.b = t;
  c.v = v;
  auto rep = check_certificate(c);
  if (!rep.pass || rep.certified_ratio <= st.best) return;
  st.best = rep.certified_ratio;
  st.cert = c;
  st.found = true;
}

void recurse(SearchState& st, int k) {
  const int K = st.K;
  if (k == K - 1) {
    evaluate_point(st);
    return;
  }
  int upper = k == 0 ? st.N : st.a[k - 1];
  int partner = K - 1 - (k + 1);  // zero-based index of b_{K-(k+1)}
  if (partner < k && partner >= 0) upper = std::min(upper, st.N - st.a[partner]);
  if (partner == k) upper = std::min(upper, st.N / 2);
  for (int val = upper; val >= 0; --val) {
    if (k == 0) {
      double b1 = val * st.step;
      if (2.0 * b1 / (1.0 + b1) <= st.best) break;
    }
    st.a[k] = val;
    recurse(st, k + 1);
  }
}

void run_grid(SearchState& st) {
  st.N = static_cast<int>(std::lround(1.0 / st.step));
  st.step = 1.0 / st.N;
  st.a.assign(st.K, 0);
  recurse(st, 0);
}

}  // namespace

SearchResult grid_search_thresholds(int K, double step) {
  if (K < 2 || K > 6) throw Error(ErrorCode::UnsupportedK, "threshold search supports K in 2..6");
  if (!(step >= 1e-3) || step > 0.5) throw Error(ErrorCode::InvalidArgument, "grid step must lie in [1e-3, 0.5]");
  SearchState st;
  st.K = K;
  long points = 0;
  if (step < 0.05) {
    st.step = 0.05;
    run_grid(st);
    points += st.points;
    st.points = 0;
  }
  st.step = step;
  run_grid(st);
  points += st.points;
  if (!st.found) throw Error(ErrorCode::NoFeasibleCertificate, "no certificate found on the grid");
  SearchResult res;
  res.cert = st.cert;
  res.ratio = st.best;
  res.grid_points = points;
  return res;
}

double sample_ratio(const ThresholdSet& t, double U00, double R00, const std::vector<std::vector<double>>& Up,
                    const std::vector<std::vector<double>>& Rp) {
  const int K = t.K;
  double best = 0.0;
  for (int k = 1; k <= K; ++k) {
    double num = U00 * R00;
    double den = U00;
    for (int I = 1; I <= k; ++I)
      for (int J = 1; J <= K + 1 - k; ++J) {
        num += Up[I][J] * Rp[I][J];
        den += Up[I][J];
      }
    best = std::max(best, num / den);
  }
  return best;
}

double beta_upper_sample(const ThresholdSet& t, long samples, uint64_t seed) {
  auto tv = threshold_violations(t);
  if (!tv.empty()) throw Error(ErrorCode::InvalidArgument, "invalid thresholds: " + tv.front());
  const int K = t.K;
  const long chunk = 4096;
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> Up(K + 1, std::vector<double>(K + 1, 0.0)), Rp = Up;
  for (long start = 0, c = 0; start < samples; start += chunk, ++c) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<uint64_t>(c)));
    long end = std::min(samples, start + chunk);
    for (long s = start; s < end; ++s) {
      const double U00 = 1.0;
      double sum_dev = 0.0;  // sum U'(R' - 1)
      for (int I = 1; I <= K; ++I)
        for (int J = 1; J <= K; ++J) {
          Up[I][J] = 0.0;
          Rp[I][J] = 0.0;
          if (I + J > K + 1) continue;
          if (unit_uniform(rng) < 0.5) continue;
          double lo, hi;
          if (I == 1 || J == 1) {
            lo = I == 1 ? t.at(J) : t.at(I);
            hi = lo + 1.0;
          } else {
            lo = t.at(I) + t.at(J);
            hi = t.at(I - 1) + t.at(J - 1);
          }
          double scale = std::exp(6.0 * unit_uniform(rng) - 3.0);
          Up[I][J] = scale * unit_uniform(rng);
          double e = unit_uniform(rng);
          Rp[I][J] = e < 0.25 ? lo : (e < 0.5 ? hi : lo + (hi - lo) * unit_uniform(rng));
          sum_dev += Up[I][J] * (Rp[I][J] - 1.0);
        }
      // Equality: U00 R00 + 0.5 sum U'R' = U00 + 0.5 sum U'.
      double R00 = 1.0 - 0.5 * sum_dev / U00;
      if (R00 < 0.0) {
        double f = U00 / (0.5 * sum_dev);
        for (int I = 1; I <= K; ++I)
          for (int J = 1; J <= K; ++J) Up[I][J] *= f;
        R00 = 0.0;
      }
      best = std::min(best, sample_ratio(t, U00, R00, Up, Rp));
    }
  }
  return best;
}

}  // namespace mvmnl
