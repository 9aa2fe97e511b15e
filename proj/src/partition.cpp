#include "mvmnl/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "enumerate.hpp"

namespace mvmnl {

std::vector<std::string> threshold_violations(const ThresholdSet& t, double tol) {
  std::vector<std::string> out;
  if (t.K < 1 || static_cast<int>(t.b.size()) != t.K) {
    out.push_back("threshold count must equal K");
    return out;
  }
  for (int k = 1; k <= t.K; ++k) {
    if (!(t.at(k) >= -tol && t.at(k) <= 1.0 + tol)) out.push_back("b_" + std::to_string(k) + " outside [0,1]");
    if (k >= 2 && t.at(k) > t.at(k - 1) + tol) out.push_back("b not nonincreasing at k=" + std::to_string(k));
  }
  if (std::fabs(t.at(t.K)) > tol) out.push_back("b_K must equal 0");
  for (int k = 1; k <= t.K - 1; ++k)
    if (t.at(k) + t.at(t.K - k) > 1.0 + tol)
      out.push_back("b_" + std::to_string(k) + " + b_" + std::to_string(t.K - k) + " exceeds 1");
  return out;
}

namespace {

std::vector<int> pair_index(const ScaledLpSolution& sol) {
  std::vector<int> idx(static_cast<size_t>(sol.n + 1) * (sol.m + 1), -1);
  for (size_t k = 0; k < sol.pairs.size(); ++k)
    idx[static_cast<size_t>(sol.pairs[k].first) * (sol.m + 1) + sol.pairs[k].second] = static_cast<int>(k);
  return idx;
}

std::vector<std::vector<double>> square(int K) {
  return std::vector<std::vector<double>>(K + 1, std::vector<double>(K + 1, 0.0));
}

}  // namespace

BlockPartition partition_blocks(const Instance& inst, const ScaledLpSolution& sol, const ThresholdSet& t) {
  if (sol.n != inst.n || sol.m != inst.m) throw Error(ErrorCode::DimensionMismatch, "solution does not match instance");
  if (is_integral(sol)) throw Error(ErrorCode::InvalidArgument, "partition needs a non-integral LP solution");
  auto tv = threshold_violations(t);
  if (!tv.empty()) throw Error(ErrorCode::InvalidArgument, "invalid thresholds: " + tv.front());

  BlockPartition bp;
  const int K = t.K;
  bp.K = K;
  bp.n = inst.n;
  bp.m = inst.m;
  bp.r_star = sol.r_star;
  bp.thresholds = t;
  bp.N1.push_back(0);
  bp.M1.push_back(0);
  for (int i = 1; i <= inst.n; ++i) {
    if (sol.lx[i] == Label::One) bp.N1.push_back(i);
    if (sol.lx[i] == Label::Half) bp.N2.push_back(i);
  }
  for (int j = 1; j <= inst.m; ++j) {
    if (sol.ly[j] == Label::One) bp.M1.push_back(j);
    if (sol.ly[j] == Label::Half) bp.M2.push_back(j);
  }
  bp.ci.assign(K + 1, 0);
  bp.cj.assign(K + 1, 0);
  for (int k = 1; k <= K; ++k) {
    double cut = t.at(k) * sol.r_star;
    for (int i = 1; i <= inst.n; ++i)
      if (inst.p[i] >= cut) bp.ci[k] = i;
    for (int j = 1; j <= inst.m; ++j)
      if (inst.q[j] >= cut) bp.cj[k] = j;
  }
  bp.band_x.assign(inst.n + 1, 0);
  bp.band_y.assign(inst.m + 1, 0);
  for (int i : bp.N2) {
    int k = 1;
    while (k < K && i > bp.ci[k]) ++k;
    bp.band_x[i] = k;
  }
  for (int j : bp.M2) {
    int k = 1;
    while (k < K && j > bp.cj[k]) ++k;
    bp.band_y[j] = k;
  }

  bp.S.assign(K + 1, std::vector<std::vector<std::pair<int, int>>>(K + 1));
  bp.U = square(K);
  bp.R = square(K);
  bp.Up = square(K);
  bp.Rp = square(K);
  auto idx = pair_index(sol);
  std::vector<int> rows = bp.N1, cols = bp.M1;
  rows.insert(rows.end(), bp.N2.begin(), bp.N2.end());
  cols.insert(cols.end(), bp.M2.begin(), bp.M2.end());
  double num00 = 0.0;
  for (int i : rows) {
    bool i_half = bp.band_x[i] > 0;
    for (int j : cols) {
      bool j_half = bp.band_y[j] > 0;
      double w = inst.u(i, j);
      double price = inst.p[i] + inst.q[j];
      if (!i_half && !j_half) {
        bp.S00.push_back({i, j});
        bp.U00 += w;
        num00 += w * price;
        continue;
      }
      int I = i_half ? bp.band_x[i] : 1;
      int J = j_half ? bp.band_y[j] : 1;
      bp.S[I][J].push_back({i, j});
      bp.U[I][J] += w;
      bp.R[I][J] += w * price;
      bool nonzero = true;
      if (i_half && j_half) {
        int k = (i > 0 && j > 0) ? idx[static_cast<size_t>(i) * (inst.m + 1) + j] : -1;
        nonzero = k >= 0 && sol.lz[k] != Label::Zero;
      }
      if (nonzero && w > 0.0) {
        bp.Up[I][J] += w;
        bp.Rp[I][J] += w * price;
      }
    }
  }
  bp.R00 = bp.U00 > 0.0 ? num00 / bp.U00 : 0.0;
  for (int I = 1; I <= K; ++I)
    for (int J = 1; J <= K; ++J) {
      bp.R[I][J] = bp.U[I][J] > 0.0 ? bp.R[I][J] / bp.U[I][J] : 0.0;
      bp.Rp[I][J] = bp.Up[I][J] > 0.0 ? bp.Rp[I][J] / bp.Up[I][J] : 0.0;
    }
  return bp;
}

std::vector<Assortment> candidate_assortments(const BlockPartition& part) {
  std::vector<Assortment> out;
  for (int k = 1; k <= part.K; ++k) {
    Assortment a = Assortment::empty(part.n, part.m);
    for (int i : part.N1)
      if (i > 0) a.x[i - 1] = 1;
    for (int j : part.M1)
      if (j > 0) a.y[j - 1] = 1;
    for (int i : part.N2)
      if (i <= part.ci[k]) a.x[i - 1] = 1;
    for (int j : part.M2)
      if (j <= part.cj[part.K + 1 - k]) a.y[j - 1] = 1;
    out.push_back(a);
  }
  return out;
}

std::vector<std::string> block_bound_violations(const BlockPartition& part, double rel_tol) {
  std::vector<std::string> out;
  const ThresholdSet& t = part.thresholds;
  const double r = part.r_star;
  const double tol = rel_tol * std::max(1.0, std::fabs(r));
  for (int I = 1; I <= part.K; ++I)
    for (int J = 1; J <= part.K; ++J) {
      if (part.Up[I][J] <= 0.0) continue;
      double R = part.Rp[I][J];
      double lo, hi = std::numeric_limits<double>::infinity();
      if (I == 1 && J == 1) {
        lo = t.at(1);
      } else if (I == 1) {
        lo = t.at(J);
      } else if (J == 1) {
        lo = t.at(I);
      } else {
        lo = t.at(I) + t.at(J);
        hi = t.at(I - 1) + t.at(J - 1);
      }
      std::ostringstream os;
      if (R < lo * r - tol) {
        os << "R'_" << I << J << " = " << R << " below " << lo * r;
        out.push_back(os.str());
      } else if (R > hi * r + tol) {
        os << "R'_" << I << J << " = " << R << " above " << hi * r;
        out.push_back(os.str());
      }
    }
  return out;
}

std::vector<std::pair<int, int>> uncovered_bundles(const BlockPartition& part, const ScaledLpSolution& sol) {
  std::map<std::pair<int, int>, int> where;
  for (auto pr : part.S00) where[pr] = 0;
  for (int I = 1; I <= part.K; ++I)
    for (int J = 1; J <= part.K; ++J)
      for (auto pr : part.S[I][J]) where[pr] = I + J;
  std::vector<std::pair<int, int>> out;
  auto covered = [&](int i, int j) {
    auto it = where.find({i, j});
    return it != where.end() && it->second <= part.K + 1;
  };
  for (size_t k = 0; k < sol.pairs.size(); ++k)
    if (sol.lz[k] != Label::Zero && !covered(sol.pairs[k].first, sol.pairs[k].second)) out.push_back(sol.pairs[k]);
  for (int i = 1; i <= sol.n; ++i)
    if (sol.lx[i] != Label::Zero && !covered(i, 0)) out.push_back({i, 0});
  for (int j = 1; j <= sol.m; ++j)
    if (sol.ly[j] != Label::Zero && !covered(0, j)) out.push_back({0, j});
  return out;
}

RoundResult round_best(const Instance& inst, const ScaledLpSolution& sol, const ThresholdSet& t) {
  RoundResult res;
  if (is_integral(sol)) {
    res.assortment = support(sol);
    res.value = revenue(inst, res.assortment);
    return res;
  }
  auto part = partition_blocks(inst, sol, t);
  auto cands = candidate_assortments(part);
  for (size_t k = 0; k < cands.size(); ++k) {
    double v = revenue(inst, cands[k]);
    if (k == 0 || v > res.value) {
      res.value = v;
      res.assortment = cands[k];
      res.k = static_cast<int>(k) + 1;
    }
  }
  return res;
}

GapEpsResult gap_eps_solve(const Instance& inst, const ScaledLpSolution& sol, double eps, uint64_t cap) {
  if (!(eps > 0.0) || eps > 1.0) throw Error(ErrorCode::InvalidArgument, "eps must lie in (0, 1]");
  const double kf = 1.0 / eps;
  const int K = static_cast<int>(std::lround(kf));
  if (K < 1 || std::fabs(kf - K) > 1e-9 * kf) throw Error(ErrorCode::InvalidArgument, "1/eps must be an integer");
  if (sol.n != inst.n || sol.m != inst.m) throw Error(ErrorCode::DimensionMismatch, "solution does not match instance");

  GapEpsResult res;
  if (is_integral(sol)) {
    res.assortment = support(sol);
    res.value = revenue(inst, res.assortment);
    return res;
  }
  const double r = sol.r_star;
  auto band = [&](double price) {
    int I = 1;
    while (I < K && price < (1.0 - I * eps) * r) ++I;
    return I;
  };
  // Group id: -1 excluded, 0 forced in, otherwise index into the group list.
  auto assign = [&](int count, const std::vector<double>& price, const std::vector<Label>& lab,
                    std::vector<int>& group, int& ngroups) {
    std::map<std::pair<int, int>, std::vector<int>> blocks;
    group.assign(count + 1, -1);
    group[0] = 0;
    for (int i = 1; i <= count; ++i) {
      if (price[i] >= r) {
        group[i] = 0;
        if (lab[i] == Label::Zero) ++res.rule_conflicts;
        continue;
      }
      if (lab[i] == Label::Zero) continue;
      int s = lab[i] == Label::One ? 1 : 2;
      blocks[{band(price[i]), s}].push_back(i);
    }
    ngroups = 0;
    for (auto& [key, members] : blocks) {
      ++ngroups;
      for (int i : members) group[i] = ngroups;
    }
  };
  std::vector<int> gx, gy;
  int R = 0, C = 0;
  assign(inst.n, inst.p, sol.lx, gx, R);
  assign(inst.m, inst.q, sol.ly, gy, C);
  res.bits = R + C;
  if (res.bits >= 63 || (uint64_t{1} << res.bits) > cap)
    throw Error(ErrorCode::CapExceeded, "block enumeration needs 2^" + std::to_string(res.bits) +
                                            " candidates, cap is " + std::to_string(cap));
  auto gp = detail::make_group_problem(R, C);
  for (int i = 0; i <= inst.n; ++i) {
    if (gx[i] < 0) continue;
    for (int j = 0; j <= inst.m; ++j) {
      if (gy[j] < 0) continue;
      double w = inst.u(i, j);
      gp.W(gx[i], gy[j]) += w;
      gp.V(gx[i], gy[j]) += w * (inst.p[i] + inst.q[j]);
    }
  }
  auto choice = detail::enumerate_groups(gp);
  Assortment a = Assortment::empty(inst.n, inst.m);
  for (int i = 1; i <= inst.n; ++i)
    if (gx[i] == 0 || (gx[i] > 0 && choice.row_on[gx[i] - 1])) a.x[i - 1] = 1;
  for (int j = 1; j <= inst.m; ++j)
    if (gy[j] == 0 || (gy[j] > 0 && choice.col_on[gy[j] - 1])) a.y[j - 1] = 1;
  res.assortment = a;
  res.value = revenue(inst, a);
  res.evaluated = choice.evaluated;
  return res;
}

}  // namespace mvmnl
