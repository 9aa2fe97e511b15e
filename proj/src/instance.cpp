#include "mvmnl/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace mvmnl {

using json = nlohmann::json;

Instance Instance::zeros(int n, int m) {
  if (n < 1 || m < 1) throw Error(ErrorCode::InvalidArgument, "n and m must be positive");
  Instance inst;
  inst.n = n;
  inst.m = m;
  inst.p.assign(n + 1, 0.0);
  inst.q.assign(m + 1, 0.0);
  inst.u = Matrix(n + 1, m + 1);
  inst.u(0, 0) = 1.0;
  return inst;
}

GeneralPriceInstance GeneralPriceInstance::zeros(int n, int m) {
  if (n < 1 || m < 1) throw Error(ErrorCode::InvalidArgument, "n and m must be positive");
  GeneralPriceInstance g;
  g.n = n;
  g.m = m;
  g.u = Matrix(n + 1, m + 1);
  g.r = Matrix(n + 1, m + 1);
  g.u(0, 0) = 1.0;
  return g;
}

GeneralPriceInstance GeneralPriceInstance::from_additive(const Instance& inst) {
  GeneralPriceInstance g = zeros(inst.n, inst.m);
  g.u = inst.u;
  for (int i = 0; i <= inst.n; ++i)
    for (int j = 0; j <= inst.m; ++j) g.r(i, j) = inst.p[i] + inst.q[j];
  return g;
}

Assortment Assortment::empty(int n, int m) {
  Assortment a;
  a.x.assign(n, 0);
  a.y.assign(m, 0);
  return a;
}

Assortment Assortment::from_indices(int n, int m, const std::vector<int>& xs,
                                    const std::vector<int>& ys) {
  Assortment a = empty(n, m);
  for (int i : xs) {
    if (i < 1 || i > n) throw Error(ErrorCode::InvalidArgument, "x index out of range: " + std::to_string(i));
    a.x[i - 1] = 1;
  }
  for (int j : ys) {
    if (j < 1 || j > m) throw Error(ErrorCode::InvalidArgument, "y index out of range: " + std::to_string(j));
    a.y[j - 1] = 1;
  }
  return a;
}

std::vector<int> Assortment::x_indices() const {
  std::vector<int> out;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

std::vector<int> Assortment::y_indices() const {
  std::vector<int> out;
  for (size_t j = 0; j < y.size(); ++j)
    if (y[j]) out.push_back(static_cast<int>(j) + 1);
  return out;
}

namespace {

void check_prices(const std::vector<double>& v, const char* name, std::vector<Violation>& out) {
  if (v.empty()) return;
  if (v[0] != 0.0) out.push_back({name, 0, -1, std::string(name) + "[0] must equal 0"});
  for (size_t k = 1; k < v.size(); ++k) {
    int idx = static_cast<int>(k);
    if (!std::isfinite(v[k]) || v[k] < 0.0)
      out.push_back({name, idx, -1, std::string(name) + " negative or non-finite at index " + std::to_string(idx)});
    if (k >= 2 && v[k] > v[k - 1])
      out.push_back({name, idx, -1, std::string(name) + " not nonincreasing at index " + std::to_string(idx)});
  }
}

void check_weights(const Matrix& u, const char* name, std::vector<Violation>& out) {
  for (int i = 0; i < u.rows(); ++i)
    for (int j = 0; j < u.cols(); ++j)
      if (!std::isfinite(u(i, j)) || u(i, j) < 0.0)
        out.push_back({name, i, j,
                       std::string(name) + " negative or non-finite at (" + std::to_string(i) + "," +
                           std::to_string(j) + ")"});
}

}  // namespace

std::vector<Violation> validate(const Instance& inst) {
  std::vector<Violation> out;
  if (inst.n < 1) out.push_back({"n", -1, -1, "n must be positive"});
  if (inst.m < 1) out.push_back({"m", -1, -1, "m must be positive"});
  if (static_cast<int>(inst.p.size()) != inst.n + 1) out.push_back({"p", -1, -1, "p must have n+1 entries"});
  if (static_cast<int>(inst.q.size()) != inst.m + 1) out.push_back({"q", -1, -1, "q must have m+1 entries"});
  if (inst.u.rows() != inst.n + 1 || inst.u.cols() != inst.m + 1) {
    out.push_back({"u", -1, -1, "u must be (n+1)x(m+1)"});
    return out;
  }
  check_prices(inst.p, "p", out);
  check_prices(inst.q, "q", out);
  if (inst.u(0, 0) != 1.0) out.push_back({"u", 0, 0, "u00 must equal 1"});
  check_weights(inst.u, "u", out);
  return out;
}

std::vector<Violation> validate(const GeneralPriceInstance& inst) {
  std::vector<Violation> out;
  if (inst.u.rows() != inst.n + 1 || inst.u.cols() != inst.m + 1 || inst.r.rows() != inst.n + 1 ||
      inst.r.cols() != inst.m + 1) {
    out.push_back({"u", -1, -1, "u and r must be (n+1)x(m+1)"});
    return out;
  }
  if (inst.u(0, 0) != 1.0) out.push_back({"u", 0, 0, "u00 must equal 1"});
  if (inst.r(0, 0) != 0.0) out.push_back({"r", 0, 0, "r00 must equal 0"});
  check_weights(inst.u, "u", out);
  check_weights(inst.r, "r", out);
  return out;
}

void require_valid(const Instance& inst) {
  auto report = validate(inst);
  if (!report.empty()) throw Error(ErrorCode::Validation, report.front().message);
}

namespace {

void check_dims(int n, int m, const Assortment& a) {
  if (static_cast<int>(a.x.size()) != n || static_cast<int>(a.y.size()) != m)
    throw Error(ErrorCode::DimensionMismatch, "assortment dimensions do not match instance");
}

template <class Price>
double ratio_over_offered(int n, int m, const Matrix& u, const Assortment& a, Price price) {
  double num = 0.0;
  double den = 0.0;
  for (int i = 0; i <= n; ++i) {
    if (i > 0 && !a.x[i - 1]) continue;
    for (int j = 0; j <= m; ++j) {
      if (j > 0 && !a.y[j - 1]) continue;
      double w = u(i, j);
      if (w == 0.0) continue;
      num += w * price(i, j);
      den += w;
    }
  }
  return den > 0.0 ? num / den : 0.0;
}

}  // namespace

double revenue(const Instance& inst, const Assortment& a) {
  check_dims(inst.n, inst.m, a);
  return ratio_over_offered(inst.n, inst.m, inst.u, a,
                            [&](int i, int j) { return inst.p[i] + inst.q[j]; });
}

double revenue_general(const GeneralPriceInstance& inst, const Assortment& a) {
  check_dims(inst.n, inst.m, a);
  return ratio_over_offered(inst.n, inst.m, inst.u, a, [&](int i, int j) { return inst.r(i, j); });
}

namespace {

std::vector<int> descending_order(const std::vector<double>& prices) {
  std::vector<int> order(prices.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return prices[a] > prices[b]; });
  return order;
}

void check_raw(const std::vector<double>& v, const char* name) {
  for (size_t k = 0; k < v.size(); ++k)
    if (!std::isfinite(v[k]) || v[k] < 0.0)
      throw Error(ErrorCode::InvalidArgument,
                  std::string(name) + " negative or non-finite at index " + std::to_string(k + 1));
}

}  // namespace

std::pair<Instance, SortPermutation> normalize(const RawInstance& raw) {
  const int n = static_cast<int>(raw.p.size());
  const int m = static_cast<int>(raw.q.size());
  if (n < 1 || m < 1) throw Error(ErrorCode::InvalidArgument, "n and m must be positive");
  if (raw.u.rows() != n + 1 || raw.u.cols() != m + 1)
    throw Error(ErrorCode::DimensionMismatch, "u must be (n+1)x(m+1)");
  check_raw(raw.p, "p");
  check_raw(raw.q, "q");
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= m; ++j)
      if (!std::isfinite(raw.u(i, j)) || raw.u(i, j) < 0.0)
        throw Error(ErrorCode::InvalidArgument, "u negative or non-finite at (" + std::to_string(i) + "," +
                                                    std::to_string(j) + ")");
  if (raw.u(0, 0) != 1.0) throw Error(ErrorCode::InvalidArgument, "u00 must equal 1");

  auto o1 = descending_order(raw.p);
  auto o2 = descending_order(raw.q);
  Instance inst = Instance::zeros(n, m);
  SortPermutation perm;
  perm.perm1.resize(n);
  perm.perm2.resize(m);
  std::vector<int> row(n + 1, 0), col(m + 1, 0);
  for (int k = 1; k <= n; ++k) {
    row[k] = o1[k - 1] + 1;
    perm.perm1[k - 1] = row[k];
    inst.p[k] = raw.p[o1[k - 1]];
  }
  for (int k = 1; k <= m; ++k) {
    col[k] = o2[k - 1] + 1;
    perm.perm2[k - 1] = col[k];
    inst.q[k] = raw.q[o2[k - 1]];
  }
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= m; ++j) inst.u(i, j) = raw.u(row[i], col[j]);
  return {inst, perm};
}

std::pair<Instance, SortPermutation> normalize(const Instance& inst) {
  RawInstance raw;
  raw.p.assign(inst.p.begin() + 1, inst.p.end());
  raw.q.assign(inst.q.begin() + 1, inst.q.end());
  raw.u = inst.u;
  return normalize(raw);
}

Assortment to_normalized(const SortPermutation& perm, const Assortment& original) {
  Assortment a = Assortment::empty(static_cast<int>(perm.perm1.size()), static_cast<int>(perm.perm2.size()));
  for (size_t k = 0; k < perm.perm1.size(); ++k) a.x[k] = original.x[perm.perm1[k] - 1];
  for (size_t k = 0; k < perm.perm2.size(); ++k) a.y[k] = original.y[perm.perm2[k] - 1];
  return a;
}

Assortment to_original(const SortPermutation& perm, const Assortment& normalized) {
  Assortment a = Assortment::empty(static_cast<int>(perm.perm1.size()), static_cast<int>(perm.perm2.size()));
  for (size_t k = 0; k < perm.perm1.size(); ++k) a.x[perm.perm1[k] - 1] = normalized.x[k];
  for (size_t k = 0; k < perm.perm2.size(); ++k) a.y[perm.perm2[k] - 1] = normalized.y[k];
  return a;
}

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

uint64_t derive_seed(uint64_t master, uint64_t index) {
  uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Distribution Distribution::uniform(double a, double b) {
  if (!(a <= b) || a < 0.0) throw Error(ErrorCode::InvalidArgument, "uniform needs 0 <= a <= b");
  Distribution d;
  d.kind_ = Kind::Uniform;
  d.a_ = a;
  d.b_ = b;
  return d;
}

Distribution Distribution::exponential(double rate) {
  if (!(rate > 0.0)) throw Error(ErrorCode::InvalidArgument, "exp needs a positive rate");
  Distribution d;
  d.kind_ = Kind::Exponential;
  d.a_ = rate;
  d.b_ = 0.0;
  return d;
}

Distribution Distribution::log_uniform(double a, double b) {
  if (!(a > 0.0) || !(a <= b)) throw Error(ErrorCode::InvalidArgument, "loguniform needs 0 < a <= b");
  Distribution d;
  d.kind_ = Kind::LogUniform;
  d.a_ = a;
  d.b_ = b;
  return d;
}

Distribution Distribution::parse(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ':')) parts.push_back(tok);
  auto num = [&](size_t k) {
    try {
      size_t used = 0;
      double v = std::stod(parts.at(k), &used);
      if (used != parts[k].size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "bad distribution spec: " + spec);
    }
  };
  if (parts.size() == 3 && parts[0] == "uniform") return uniform(num(1), num(2));
  if (parts.size() == 2 && parts[0] == "exp") return exponential(num(1));
  if (parts.size() == 3 && parts[0] == "loguniform") return log_uniform(num(1), num(2));
  throw Error(ErrorCode::InvalidArgument, "bad distribution spec: " + spec);
}

double Distribution::sample(std::mt19937_64& rng) const {
  double v = unit_uniform(rng);
  switch (kind_) {
    case Kind::Uniform:
      return a_ + (b_ - a_) * v;
    case Kind::Exponential:
      return -std::log1p(-v) / a_;
    case Kind::LogUniform:
      return std::exp(std::log(a_) + (std::log(b_) - std::log(a_)) * v);
  }
  return 0.0;
}

std::string Distribution::str() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind_) {
    case Kind::Uniform:
      os << "uniform:" << a_ << ":" << b_;
      break;
    case Kind::Exponential:
      os << "exp:" << a_;
      break;
    case Kind::LogUniform:
      os << "loguniform:" << a_ << ":" << b_;
      break;
  }
  return os.str();
}

Distribution default_price_dist() { return Distribution::uniform(0.5, 1.0); }
Distribution default_weight_dist() { return Distribution::uniform(0.0, 6.0); }

Instance gen_random(int n, int m, uint64_t seed, const Distribution& price_dist,
                    const Distribution& weight_dist) {
  Instance inst = Instance::zeros(n, m);
  std::mt19937_64 rng(seed);
  for (int i = 1; i <= n; ++i) inst.p[i] = price_dist.sample(rng);
  for (int j = 1; j <= m; ++j) inst.q[j] = price_dist.sample(rng);
  std::sort(inst.p.begin() + 1, inst.p.end(), std::greater<double>());
  std::sort(inst.q.begin() + 1, inst.q.end(), std::greater<double>());
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= m; ++j)
      if (i != 0 || j != 0) inst.u(i, j) = weight_dist.sample(rng);
  return inst;
}

Instance gen_random(int n, int m, uint64_t seed) {
  return gen_random(n, m, seed, default_price_dist(), default_weight_dist());
}

namespace {

json instance_json(const Instance& inst) {
  json j;
  j["n"] = inst.n;
  j["m"] = inst.m;
  j["p"] = std::vector<double>(inst.p.begin() + 1, inst.p.end());
  j["q"] = std::vector<double>(inst.q.begin() + 1, inst.q.end());
  json rows = json::array();
  for (int i = 0; i <= inst.n; ++i) {
    json row = json::array();
    for (int c = 0; c <= inst.m; ++c) row.push_back(inst.u(i, c));
    rows.push_back(row);
  }
  j["u"] = rows;
  return j;
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw Error(ErrorCode::Parse, std::string("missing field \"") + name + "\"");
  return *it;
}

double number_at(const json& j, const std::string& where) {
  if (!j.is_number()) throw Error(ErrorCode::Parse, "expected number at " + where);
  return j.get<double>();
}

Instance parse_instance(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "instance must be a JSON object");
  const json& jn = field(j, "n");
  const json& jm = field(j, "m");
  if (!jn.is_number_integer() || !jm.is_number_integer())
    throw Error(ErrorCode::Parse, "fields \"n\" and \"m\" must be integers");
  int n = jn.get<int>();
  int m = jm.get<int>();
  if (n < 1 || m < 1) throw Error(ErrorCode::Parse, "fields \"n\" and \"m\" must be positive");
  const json& jp = field(j, "p");
  const json& jq = field(j, "q");
  const json& ju = field(j, "u");
  if (!jp.is_array() || static_cast<int>(jp.size()) != n)
    throw Error(ErrorCode::Parse, "field \"p\" must be an array of n numbers");
  if (!jq.is_array() || static_cast<int>(jq.size()) != m)
    throw Error(ErrorCode::Parse, "field \"q\" must be an array of m numbers");
  if (!ju.is_array() || static_cast<int>(ju.size()) != n + 1)
    throw Error(ErrorCode::Parse, "field \"u\" must have n+1 rows");
  Instance inst = Instance::zeros(n, m);
  for (int i = 1; i <= n; ++i) inst.p[i] = number_at(jp[i - 1], "p[" + std::to_string(i - 1) + "]");
  for (int c = 1; c <= m; ++c) inst.q[c] = number_at(jq[c - 1], "q[" + std::to_string(c - 1) + "]");
  for (int i = 0; i <= n; ++i) {
    const json& row = ju[i];
    if (!row.is_array() || static_cast<int>(row.size()) != m + 1)
      throw Error(ErrorCode::Parse, "field \"u\" row " + std::to_string(i) + " must have m+1 entries");
    for (int c = 0; c <= m; ++c)
      inst.u(i, c) = number_at(row[c], "u[" + std::to_string(i) + "][" + std::to_string(c) + "]");
  }
  auto report = validate(inst);
  if (!report.empty()) throw Error(ErrorCode::Validation, report.front().message);
  return inst;
}

}  // namespace

std::string instance_to_json(const Instance& inst) { return instance_json(inst).dump(); }

Instance instance_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("instance JSON: ") + e.what());
  }
  return parse_instance(j);
}

Instance read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return instance_from_json(ss.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

void write_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << instance_json(inst).dump(1) << "\n";
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path);
}

std::string assortment_to_json(const Assortment& a) {
  json j;
  j["x"] = a.x_indices();
  j["y"] = a.y_indices();
  return j.dump();
}

Assortment assortment_from_json(const std::string& text, int n, int m) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("assortment JSON: ") + e.what());
  }
  if (!j.contains("x") || !j.contains("y")) throw Error(ErrorCode::Parse, "assortment needs \"x\" and \"y\"");
  return Assortment::from_indices(n, m, j["x"].get<std::vector<int>>(), j["y"].get<std::vector<int>>());
}

}  // namespace mvmnl
