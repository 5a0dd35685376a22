#pragma once

#include <string>
#include <vector>

#include "isoprofile/graph.hpp"

namespace isoprofile {

enum class MetricKind { GraphDistance, GreenMetric, Custom };

/// Dense distance rows d(x, .) for every source x.
class MetricTable {
 public:
  static MetricTable graph_distance(const Graph& g);
  /// d(x, y) = -log G_t(x, y); optionally symmetrized by the max of both orders.
  static MetricTable green_metric(const Graph& g, double t, bool symmetrize = false);
  /// Rows must be square, finite, nonnegative, with zero diagonal.
  static MetricTable custom(std::vector<std::vector<double>> rows, std::string name = "custom");

  double operator()(Vertex x, Vertex y) const { return values_[static_cast<std::size_t>(x) * n_ + y]; }
  std::size_t vertex_count() const { return n_; }
  MetricKind kind() const { return kind_; }
  /// "graph-distance", "green-metric(t=4)", or the custom name.
  const std::string& provenance() const { return provenance_; }
  /// Largest distance across an edge.
  double edge_span(const Graph& g) const;

 private:
  MetricTable(std::size_t n, std::vector<double> values, MetricKind kind, std::string provenance)
      : n_(n), values_(std::move(values)), kind_(kind), provenance_(std::move(provenance)) {}

  std::size_t n_;
  std::vector<double> values_;
  MetricKind kind_;
  std::string provenance_;
};

}  // namespace isoprofile
