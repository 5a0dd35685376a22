#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "isoprofile/graph.hpp"
#include "isoprofile/rational.hpp"

namespace isoprofile {

/// The law P^step(source, .) of the lazy simple random walk, dense over V.
struct DistributionRow {
  Vertex source = 0;
  int step = 0;
  std::vector<double> mass;

  double total() const;
};

DistributionRow point_mass(const Graph& g, Vertex x);

/// out(z) = in(z)/2 + sum_{w ~ z} in(w) / (2 deg w). `out` must not alias `in`.
void lazy_step_into(const Graph& g, std::span<const double> in, std::span<double> out);

DistributionRow lazy_step(const Graph& g, const DistributionRow& row);

/// Rows P^m(x, .) for m = 0..n.
std::vector<DistributionRow> distribution(const Graph& g, Vertex x, int n);

/// Only the last row P^n(x, .).
DistributionRow distribution_at(const Graph& g, Vertex x, int n);

/// Half the L1 distance.
double tv_distance(std::span<const double> p, std::span<const double> q);
inline double tv_distance(const DistributionRow& p, const DistributionRow& q) {
  return tv_distance(p.mass, q.mass);
}

/// Shannon entropy in nats, with 0 log 0 = 0.
double entropy(std::span<const double> p);

/// sum_z p(z) d(z).
double expectation(std::span<const double> p, std::span<const int> d);

/// Lazy-walk trajectory of n steps (n + 1 vertices), deterministic in seed.
std::vector<Vertex> sample_path(const Graph& g, Vertex x, int n, std::uint64_t seed);

/// One lazy step from `current` using the given engine.
template <class Eng>
Vertex lazy_move(const Graph& g, Vertex current, Eng& eng);

using ExactRow = std::vector<Rational>;

inline constexpr std::size_t kExactRowVertexLimit = 64;

/// Rows P^m(x, .) for m = 0..n in exact rational arithmetic; at most 64 vertices.
std::vector<ExactRow> distribution_exact(const Graph& g, Vertex x, int n);

Rational tv_distance_exact(const ExactRow& p, const ExactRow& q);

}  // namespace isoprofile

#include "isoprofile/rng.hpp"

namespace isoprofile {

template <class Eng>
Vertex lazy_move(const Graph& g, Vertex current, Eng& eng) {
  // One draw picks "stay" (first half of 2*deg slots) or a neighbor.
  const auto deg = static_cast<std::uint64_t>(g.degree(current));
  const std::uint64_t slot = uniform_below(eng, 2 * deg);
  if (slot < deg) return current;
  return g.neighbors(current)[slot - deg];
}

}  // namespace isoprofile
