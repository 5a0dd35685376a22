#include "isoprofile/walk.hpp"

#include <cmath>
#include <string>

#include "isoprofile/errors.hpp"
#include "isoprofile/parallel.hpp"

namespace isoprofile {

double DistributionRow::total() const {
  CompensatedSum sum;
  for (double p : mass) sum.add(p);
  return sum.value();
}

DistributionRow point_mass(const Graph& g, Vertex x) {
  DistributionRow row{x, 0, std::vector<double>(g.vertex_count(), 0.0)};
  row.mass[x] = 1.0;
  return row;
}

void lazy_step_into(const Graph& g, std::span<const double> in, std::span<double> out) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex z = 0; z < n; ++z) {
    double incoming = 0.0;
    for (Vertex w : g.neighbors(z)) incoming += in[w] / g.degree(w);
    out[z] = 0.5 * (in[z] + incoming);
  }
}

DistributionRow lazy_step(const Graph& g, const DistributionRow& row) {
  DistributionRow next{row.source, row.step + 1, std::vector<double>(row.mass.size())};
  lazy_step_into(g, row.mass, next.mass);
  return next;
}

std::vector<DistributionRow> distribution(const Graph& g, Vertex x, int n) {
  if (n < 0) throw DomainError("horizon must be nonnegative");
  std::vector<DistributionRow> rows;
  rows.reserve(static_cast<std::size_t>(n) + 1);
  rows.push_back(point_mass(g, x));
  for (int m = 1; m <= n; ++m) rows.push_back(lazy_step(g, rows.back()));
  return rows;
}

DistributionRow distribution_at(const Graph& g, Vertex x, int n) {
  if (n < 0) throw DomainError("horizon must be nonnegative");
  DistributionRow row = point_mass(g, x);
  std::vector<double> scratch(row.mass.size());
  for (int m = 1; m <= n; ++m) {
    lazy_step_into(g, row.mass, scratch);
    row.mass.swap(scratch);
  }
  row.step = n;
  return row;
}

double tv_distance(std::span<const double> p, std::span<const double> q) {
  CompensatedSum sum;
  for (std::size_t i = 0; i < p.size(); ++i) sum.add(std::abs(p[i] - q[i]));
  return 0.5 * sum.value();
}

double entropy(std::span<const double> p) {
  CompensatedSum sum;
  for (double v : p)
    if (v > 0.0) sum.add(-v * std::log(v));
  return sum.value();
}

double expectation(std::span<const double> p, std::span<const int> d) {
  CompensatedSum sum;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0.0) sum.add(p[i] * d[i]);
  return sum.value();
}

std::vector<Vertex> sample_path(const Graph& g, Vertex x, int n, std::uint64_t seed) {
  if (n < 0) throw DomainError("horizon must be nonnegative");
  Engine eng(seed);
  std::vector<Vertex> path;
  path.reserve(static_cast<std::size_t>(n) + 1);
  path.push_back(x);
  for (int m = 0; m < n; ++m) path.push_back(lazy_move(g, path.back(), eng));
  return path;
}

std::vector<ExactRow> distribution_exact(const Graph& g, Vertex x, int n) {
  if (g.vertex_count() > kExactRowVertexLimit)
    throw BudgetError("exact rows limited to " + std::to_string(kExactRowVertexLimit) + " vertices");
  if (n < 0) throw DomainError("horizon must be nonnegative");
  const auto size = g.vertex_count();
  std::vector<ExactRow> rows;
  ExactRow row(size, Rational(0));
  row[x] = 1;
  rows.push_back(row);
  for (int m = 1; m <= n; ++m) {
    ExactRow next(size, Rational(0));
    for (Vertex z = 0; z < static_cast<Vertex>(size); ++z) {
      Rational incoming = 0;
      for (Vertex w : g.neighbors(z)) incoming += rows.back()[w] / g.degree(w);
      next[z] = (rows.back()[z] + incoming) / 2;
    }
    rows.push_back(std::move(next));
  }
  return rows;
}

Rational tv_distance_exact(const ExactRow& p, const ExactRow& q) {
  Rational sum = 0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += abs(p[i] - q[i]);
  return sum / 2;
}

}  // namespace isoprofile
