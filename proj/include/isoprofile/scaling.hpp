#pragma once

#include <utility>
#include <vector>

#include "isoprofile/report.hpp"

namespace isoprofile {

/// Least-squares fit of log(value) = exponent * log(n) + intercept.
struct ScalingFit {
  std::vector<std::pair<double, double>> series;  // (n, value) pairs used in the fit
  double exponent = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // root mean square of the log residuals
  Json to_json() const;
};

inline constexpr std::size_t kMinScalingPoints = 5;

/// Points with non-positive n or value are dropped. Throws DegeneracyError
/// with fewer than five remaining points or a single distinct n.
ScalingFit fit_power_law(const std::vector<std::pair<double, double>>& series);

}  // namespace isoprofile
