#include "isoprofile/metric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "isoprofile/errors.hpp"
#include "isoprofile/green.hpp"

namespace isoprofile {

MetricTable MetricTable::graph_distance(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<double> values(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto dist = bfs_distances(g, static_cast<Vertex>(x));
    std::copy(dist.begin(), dist.end(), values.begin() + static_cast<std::ptrdiff_t>(x * n));
  }
  return MetricTable(n, std::move(values), MetricKind::GraphDistance, "graph-distance");
}

MetricTable MetricTable::green_metric(const Graph& g, double t, bool symmetrize) {
  if (!(t > 1.0)) throw DomainError("green metric needs t > 1 for finite distances");
  const auto kernel = green_kernel(g, t);
  const std::size_t n = g.vertex_count();
  std::vector<double> values(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto u = static_cast<Vertex>(x), v = static_cast<Vertex>(y);
      values[x * n + y] = x == y ? 0.0 : (symmetrize ? kernel.symmetric_metric(u, v) : kernel.metric(u, v));
    }
  std::ostringstream name;
  name << "green-metric(t=" << t << (symmetrize ? ",symmetric" : "") << ")";
  return MetricTable(n, std::move(values), MetricKind::GreenMetric, name.str());
}

MetricTable MetricTable::custom(std::vector<std::vector<double>> rows, std::string name) {
  const std::size_t n = rows.size();
  std::vector<double> values;
  values.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    if (rows[x].size() != n) throw DomainError("metric rows must be square");
    for (std::size_t y = 0; y < n; ++y) {
      const double d = rows[x][y];
      if (!std::isfinite(d) || d < 0.0) throw DomainError("metric values must be finite and nonnegative");
      if (x == y && d != 0.0) throw DomainError("metric diagonal must be zero");
      values.push_back(d);
    }
  }
  return MetricTable(n, std::move(values), MetricKind::Custom, std::move(name));
}

double MetricTable::edge_span(const Graph& g) const {
  double span = 0.0;
  for (const auto& [u, v] : g.edges()) span = std::max({span, (*this)(u, v), (*this)(v, u)});
  return span;
}

}  // namespace isoprofile
