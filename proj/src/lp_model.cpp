#include <cmath>
#include <random>
#include <sstream>

#include "json.hpp"
#include "lp_internal.hpp"

namespace mvmnl {

using json = nlohmann::json;

LpModel build_lp(const Instance& inst) {
  LpModel mdl;
  mdl.n = inst.n;
  mdl.m = inst.m;
  mdl.obj_w = 0.0;
  mdl.eq_w = 1.0;
  mdl.obj_x.assign(inst.n + 1, 0.0);
  mdl.eq_x.assign(inst.n + 1, 0.0);
  mdl.obj_y.assign(inst.m + 1, 0.0);
  mdl.eq_y.assign(inst.m + 1, 0.0);
  for (int i = 1; i <= inst.n; ++i) {
    mdl.obj_x[i] = inst.u(i, 0) * inst.p[i];
    mdl.eq_x[i] = inst.u(i, 0);
  }
  for (int j = 1; j <= inst.m; ++j) {
    mdl.obj_y[j] = inst.u(0, j) * inst.q[j];
    mdl.eq_y[j] = inst.u(0, j);
  }
  size_t cnt = 0;
  for (int i = 1; i <= inst.n; ++i)
    for (int j = 1; j <= inst.m; ++j)
      if (inst.u(i, j) > 0.0) ++cnt;
  mdl.pairs.reserve(cnt);
  mdl.obj_z.reserve(cnt);
  mdl.eq_z.reserve(cnt);
  for (int i = 1; i <= inst.n; ++i)
    for (int j = 1; j <= inst.m; ++j) {
      double w = inst.u(i, j);
      if (w <= 0.0) continue;
      mdl.pairs.push_back({i, j});
      mdl.obj_z.push_back(w * (inst.p[i] + inst.q[j]));
      mdl.eq_z.push_back(w);
    }
  return mdl;
}

std::string LpModel::to_lp_text() const {
  std::ostringstream os;
  os.precision(17);
  auto term = [&](double c, const std::string& v) {
    if (c == 0.0) return;
    os << (c < 0 ? " - " : " + ") << std::fabs(c) << " " << v;
  };
  auto xn = [](int i) { return "x" + std::to_string(i); };
  auto yn = [](int j) { return "y" + std::to_string(j); };
  auto zn = [](int i, int j) { return "z" + std::to_string(i) + "_" + std::to_string(j); };
  os << "Maximize\n obj:";
  term(obj_w, "w");
  for (int i = 1; i <= n; ++i) term(obj_x[i], xn(i));
  for (int j = 1; j <= m; ++j) term(obj_y[j], yn(j));
  for (size_t k = 0; k < pairs.size(); ++k) term(obj_z[k], zn(pairs[k].first, pairs[k].second));
  os << "\nSubject To\n eq:";
  term(eq_w, "w");
  for (int i = 1; i <= n; ++i) term(eq_x[i], xn(i));
  for (int j = 1; j <= m; ++j) term(eq_y[j], yn(j));
  for (size_t k = 0; k < pairs.size(); ++k) term(eq_z[k], zn(pairs[k].first, pairs[k].second));
  os << " = 1\n";
  for (auto [i, j] : pairs) {
    std::string z = zn(i, j);
    os << " " << z << "_x: " << z << " - " << xn(i) << " <= 0\n";
    os << " " << z << "_y: " << z << " - " << yn(j) << " <= 0\n";
    os << " " << z << "_xy: " << xn(i) << " + " << yn(j) << " - w - " << z << " <= 0\n";
  }
  for (int i = 1; i <= n; ++i) os << " bx" << i << ": " << xn(i) << " - w <= 0\n";
  for (int j = 1; j <= m; ++j) os << " by" << j << ": " << yn(j) << " - w <= 0\n";
  os << "End\n";
  return os.str();
}

const char* label_name(Label l) {
  switch (l) {
    case Label::Zero:
      return "zero";
    case Label::Half:
      return "half";
    case Label::One:
      return "one";
  }
  return "?";
}

std::string ScaledLpSolution::to_json() const {
  json j;
  j["w"] = w;
  j["r_star"] = r_star;
  j["x"] = std::vector<double>(xbar.begin() + 1, xbar.end());
  j["y"] = std::vector<double>(ybar.begin() + 1, ybar.end());
  json z = json::object();
  json lzj = json::object();
  for (size_t k = 0; k < pairs.size(); ++k) {
    std::string key = std::to_string(pairs[k].first) + "," + std::to_string(pairs[k].second);
    z[key] = zbar[k];
    lzj[key] = label_name(lz[k]);
  }
  j["z"] = z;
  json lxj = json::array(), lyj = json::array();
  for (int i = 1; i <= n; ++i) lxj.push_back(label_name(lx[i]));
  for (int c = 1; c <= m; ++c) lyj.push_back(label_name(ly[c]));
  j["labels"] = {{"x", lxj}, {"y", lyj}, {"z", lzj}};
  return j.dump();
}

double model_objective(const LpModel& mdl, const LpRaw& raw) {
  double s = mdl.obj_w * raw.w;
  for (int i = 1; i <= mdl.n; ++i) s += mdl.obj_x[i] * raw.x[i];
  for (int j = 1; j <= mdl.m; ++j) s += mdl.obj_y[j] * raw.y[j];
  for (size_t k = 0; k < mdl.pairs.size(); ++k) s += mdl.obj_z[k] * raw.z[k];
  return s;
}

double model_equality(const LpModel& mdl, const LpRaw& raw) {
  double s = mdl.eq_w * raw.w;
  for (int i = 1; i <= mdl.n; ++i) s += mdl.eq_x[i] * raw.x[i];
  for (int j = 1; j <= mdl.m; ++j) s += mdl.eq_y[j] * raw.y[j];
  for (size_t k = 0; k < mdl.pairs.size(); ++k) s += mdl.eq_z[k] * raw.z[k];
  return s;
}

double max_violation(const LpModel& mdl, const LpRaw& raw) {
  double v = std::fabs(model_equality(mdl, raw) - 1.0);
  auto upd = [&](double slack_neg) { v = std::max(v, slack_neg); };
  upd(-raw.w);
  for (int i = 1; i <= mdl.n; ++i) {
    upd(-raw.x[i]);
    upd(raw.x[i] - raw.w);
  }
  for (int j = 1; j <= mdl.m; ++j) {
    upd(-raw.y[j]);
    upd(raw.y[j] - raw.w);
  }
  for (size_t k = 0; k < mdl.pairs.size(); ++k) {
    auto [i, j] = mdl.pairs[k];
    double z = raw.z[k];
    upd(-z);
    upd(z - raw.x[i]);
    upd(z - raw.y[j]);
    upd(raw.x[i] + raw.y[j] - raw.w - z);
  }
  return v;
}

LpRaw unscale(const ScaledLpSolution& sol) {
  LpRaw raw;
  raw.w = sol.w;
  raw.x.resize(sol.n + 1, 0.0);
  raw.y.resize(sol.m + 1, 0.0);
  for (int i = 1; i <= sol.n; ++i) raw.x[i] = sol.xbar[i] * sol.w;
  for (int j = 1; j <= sol.m; ++j) raw.y[j] = sol.ybar[j] * sol.w;
  raw.z.resize(sol.zbar.size());
  for (size_t k = 0; k < sol.zbar.size(); ++k) raw.z[k] = sol.zbar[k] * sol.w;
  return raw;
}

namespace detail {

double objective_scale(const LpModel& mdl) {
  double s = std::fabs(mdl.obj_w);
  for (double c : mdl.obj_x) s = std::max(s, std::fabs(c));
  for (double c : mdl.obj_y) s = std::max(s, std::fabs(c));
  for (double c : mdl.obj_z) s = std::max(s, std::fabs(c));
  return std::max(s, 1e-300);
}

std::optional<ScaledLpSolution> classify(const LpModel& mdl, const LpRaw& raw, double tau) {
  if (!(raw.w > 0.0)) return std::nullopt;
  ScaledLpSolution s;
  s.n = mdl.n;
  s.m = mdl.m;
  s.w = raw.w;
  s.pairs = mdl.pairs;
  s.xbar.assign(mdl.n + 1, 1.0);
  s.ybar.assign(mdl.m + 1, 1.0);
  s.lx.assign(mdl.n + 1, Label::One);
  s.ly.assign(mdl.m + 1, Label::One);
  s.zbar.resize(mdl.pairs.size());
  s.lz.resize(mdl.pairs.size());
  auto label = [&](double v, double& snapped, Label& l) {
    if (std::fabs(v) <= tau) {
      snapped = 0.0;
      l = Label::Zero;
    } else if (std::fabs(v - 0.5) <= tau) {
      snapped = 0.5;
      l = Label::Half;
    } else if (std::fabs(v - 1.0) <= tau) {
      snapped = 1.0;
      l = Label::One;
    } else {
      return false;
    }
    return true;
  };
  for (int i = 1; i <= mdl.n; ++i)
    if (!label(raw.x[i] / raw.w, s.xbar[i], s.lx[i])) return std::nullopt;
  for (int j = 1; j <= mdl.m; ++j)
    if (!label(raw.y[j] / raw.w, s.ybar[j], s.ly[j])) return std::nullopt;
  for (size_t k = 0; k < mdl.pairs.size(); ++k)
    if (!label(raw.z[k] / raw.w, s.zbar[k], s.lz[k])) return std::nullopt;
  s.r_star = model_objective(mdl, raw);
  return s;
}

}  // namespace detail

bool is_integral(const ScaledLpSolution& sol) {
  for (int i = 1; i <= sol.n; ++i)
    if (sol.lx[i] == Label::Half) return false;
  for (int j = 1; j <= sol.m; ++j)
    if (sol.ly[j] == Label::Half) return false;
  for (Label l : sol.lz)
    if (l == Label::Half) return false;
  return true;
}

Assortment support(const ScaledLpSolution& sol) {
  Assortment a = Assortment::empty(sol.n, sol.m);
  for (int i = 1; i <= sol.n; ++i) a.x[i - 1] = sol.lx[i] != Label::Zero;
  for (int j = 1; j <= sol.m; ++j) a.y[j - 1] = sol.ly[j] != Label::Zero;
  return a;
}

Assortment random_round(const ScaledLpSolution& sol, uint64_t seed) {
  std::mt19937_64 rng(seed);
  Assortment a = Assortment::empty(sol.n, sol.m);
  for (int i = 1; i <= sol.n; ++i) {
    if (sol.lx[i] == Label::One) a.x[i - 1] = 1;
    if (sol.lx[i] == Label::Half) a.x[i - 1] = unit_uniform(rng) < 0.5;
  }
  for (int j = 1; j <= sol.m; ++j) {
    if (sol.ly[j] == Label::One) a.y[j - 1] = 1;
    if (sol.ly[j] == Label::Half) a.y[j - 1] = unit_uniform(rng) < 0.5;
  }
  return a;
}

ScaledLpSolution solve_lp(const Instance& inst) { return solve_vertex(build_lp(inst)); }

}  // namespace mvmnl
