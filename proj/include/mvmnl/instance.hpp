#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mvmnl/error.hpp"

namespace mvmnl {

// Row-major (n+1) x (m+1) matrix; row 0 / column 0 are the no-purchase options.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

  double& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<double>& data() const { return data_; }

  bool operator==(const Matrix& o) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

struct Instance {
  int n = 0;
  int m = 0;
  std::vector<double> p;  // size n+1, p[0] = 0
  std::vector<double> q;  // size m+1, q[0] = 0
  Matrix u;               // (n+1) x (m+1), u(0,0) = 1

  static Instance zeros(int n, int m);
  bool operator==(const Instance& o) const = default;
};

struct GeneralPriceInstance {
  int n = 0;
  int m = 0;
  Matrix u;
  Matrix r;

  static GeneralPriceInstance zeros(int n, int m);
  static GeneralPriceInstance from_additive(const Instance& inst);
};

// x[i-1] is product i of category 1, y[j-1] is product j of category 2.
struct Assortment {
  std::vector<uint8_t> x;
  std::vector<uint8_t> y;

  static Assortment empty(int n, int m);
  static Assortment from_indices(int n, int m, const std::vector<int>& xs, const std::vector<int>& ys);
  std::vector<int> x_indices() const;
  std::vector<int> y_indices() const;
  bool operator==(const Assortment& o) const = default;
};

struct SortPermutation {
  std::vector<int> perm1;  // perm1[k-1] = original label of normalized product k
  std::vector<int> perm2;
};

struct Violation {
  std::string field;
  int i = -1;
  int j = -1;
  std::string message;
};

std::vector<Violation> validate(const Instance& inst);
std::vector<Violation> validate(const GeneralPriceInstance& inst);
void require_valid(const Instance& inst);

double revenue(const Instance& inst, const Assortment& a);
double revenue_general(const GeneralPriceInstance& inst, const Assortment& a);

struct RawInstance {
  std::vector<double> p;  // n prices, original labels 1..n
  std::vector<double> q;
  Matrix u;               // (n+1) x (m+1) in original labels
};

std::pair<Instance, SortPermutation> normalize(const RawInstance& raw);
std::pair<Instance, SortPermutation> normalize(const Instance& inst);
Assortment to_normalized(const SortPermutation& perm, const Assortment& original);
Assortment to_original(const SortPermutation& perm, const Assortment& normalized);

class Distribution {
 public:
  enum class Kind { Uniform, Exponential, LogUniform };

  static Distribution uniform(double a, double b);
  static Distribution exponential(double rate);
  static Distribution log_uniform(double a, double b);
  // "uniform:a:b", "exp:rate", "loguniform:a:b"
  static Distribution parse(const std::string& spec);

  double sample(std::mt19937_64& rng) const;
  std::string str() const;
  Kind kind() const { return kind_; }

 private:
  Kind kind_ = Kind::Uniform;
  double a_ = 0.0;
  double b_ = 1.0;
};

double unit_uniform(std::mt19937_64& rng);
uint64_t derive_seed(uint64_t master, uint64_t index);

Distribution default_price_dist();
Distribution default_weight_dist();

Instance gen_random(int n, int m, uint64_t seed, const Distribution& price_dist,
                    const Distribution& weight_dist);
Instance gen_random(int n, int m, uint64_t seed);

Instance read_instance(const std::string& path);
void write_instance(const Instance& inst, const std::string& path);
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

std::string assortment_to_json(const Assortment& a);
Assortment assortment_from_json(const std::string& text, int n, int m);

}  // namespace mvmnl
