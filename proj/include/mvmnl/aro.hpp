#pragma once

#include "mvmnl/exact.hpp"
#include "mvmnl/instance.hpp"

namespace mvmnl {

enum class ZeroedCategory { ZeroQ, ZeroP };

struct SingleCategoryResult {
  Assortment assortment;
  double value = 0.0;
  ZeroedCategory which = ZeroedCategory::ZeroQ;
  long candidates = 0;
};

SingleCategoryResult solve_zero_q(const Instance& inst);
SingleCategoryResult solve_zero_p(const Instance& inst);

struct AroResult {
  Assortment assortment;
  double value = 0.0;  // full revenue
  double pi_p = 0.0;
  double pi_q = 0.0;
  ZeroedCategory which = ZeroedCategory::ZeroQ;
};

AroResult aro_best(const Instance& inst);

Instance zero_q(const Instance& inst);
Instance zero_p(const Instance& inst);
Instance transpose(const Instance& inst);

}  // namespace mvmnl
