#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "isoprofile/rational.hpp"

namespace isoprofile {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Default cap on the number of vertices any generator or loader may produce.
inline constexpr std::size_t kDefaultVertexCap = std::size_t{1} << 22;

/// Finite, simple, connected, undirected graph in compressed neighbor-list
/// form. Immutable after construction; safe to share across threads.
class Graph {
 public:
  /// Validates symmetry, absence of loops and parallel edges, and
  /// connectivity. Neighbor lists are sorted on the way in. `labels` holds the
  /// original id of each vertex (defaults to the index itself).
  static Graph from_adjacency(std::vector<std::vector<Vertex>> adjacency,
                              std::vector<std::int64_t> labels = {});

  std::size_t vertex_count() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
  int max_degree() const { return max_degree_; }
  /// Sum of all degrees, 2|E|.
  std::int64_t total_volume() const { return static_cast<std::int64_t>(targets_.size()); }
  std::int64_t label(Vertex v) const { return labels_[v]; }
  bool adjacent(Vertex u, Vertex v) const;
  /// Undirected edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

 private:
  Graph() = default;

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<std::int64_t> labels_;
  int max_degree_ = 0;
};

/// A set of vertices with its volume and edge boundary computed eagerly.
class VertexSet {
 public:
  VertexSet(const Graph& g, std::span<const Vertex> members);

  static VertexSet all(const Graph& g);

  bool contains(Vertex v) const { return membership_[v] != 0; }
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  const std::vector<Vertex>& members() const { return members_; }
  /// Sum of member degrees.
  std::int64_t volume() const { return volume_; }
  /// Number of edges with exactly one endpoint in the set.
  std::int64_t boundary() const { return boundary_; }
  VertexSet complement(const Graph& g) const;

 private:
  std::vector<char> membership_;
  std::vector<Vertex> members_;
  std::int64_t volume_ = 0;
  std::int64_t boundary_ = 0;
};

/// Single-source shortest-path distances (edge counts).
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Distances between all pairs, row per source.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

/// Largest distance between two members, measured in the whole graph.
int set_diameter(const Graph& g, std::span<const Vertex> members);

/// |∂W| / vol(W), exact. Throws DomainError for an empty set.
Rational boundary_volume_ratio(const Graph& g, const VertexSet& w);

}  // namespace isoprofile
