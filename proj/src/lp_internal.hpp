#pragma once

#include <optional>

#include "mvmnl/lp.hpp"

namespace mvmnl::detail {

// Returns nullopt when some scaled value is not within tolerance of {0, 1/2, 1}.
std::optional<ScaledLpSolution> classify(const LpModel& model, const LpRaw& raw, double tau = kClassifyTol);

double objective_scale(const LpModel& model);

}  // namespace mvmnl::detail
