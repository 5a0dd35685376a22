#include "isoprofile/scaling.hpp"

#include <cmath>

#include "isoprofile/errors.hpp"

namespace isoprofile {

Json ScalingFit::to_json() const {
  Json points = Json::array();
  for (const auto& [n, v] : series) points.push_back({{"n", n}, {"value", v}});
  return Json{{"series", points}, {"exponent", exponent}, {"intercept", intercept}, {"residual", residual}};
}

ScalingFit fit_power_law(const std::vector<std::pair<double, double>>& series) {
  ScalingFit fit;
  for (const auto& [n, v] : series)
    if (n > 0.0 && v > 0.0 && std::isfinite(n) && std::isfinite(v)) fit.series.emplace_back(n, v);
  const auto count = static_cast<double>(fit.series.size());
  if (fit.series.size() < kMinScalingPoints)
    throw DegeneracyError("scaling fit needs at least " + std::to_string(kMinScalingPoints) + " positive points");
  double mx = 0.0, my = 0.0;
  for (const auto& [n, v] : fit.series) {
    mx += std::log(n);
    my += std::log(v);
  }
  mx /= count;
  my /= count;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [n, v] : fit.series) {
    sxx += (std::log(n) - mx) * (std::log(n) - mx);
    sxy += (std::log(n) - mx) * (std::log(v) - my);
  }
  if (!(sxx > 0.0)) throw DegeneracyError("scaling fit needs at least two distinct horizons");
  fit.exponent = sxy / sxx;
  fit.intercept = my - fit.exponent * mx;
  double sse = 0.0;
  for (const auto& [n, v] : fit.series) {
    const double r = std::log(v) - (fit.exponent * std::log(n) + fit.intercept);
    sse += r * r;
  }
  fit.residual = std::sqrt(sse / count);
  return fit;
}

}  // namespace isoprofile
