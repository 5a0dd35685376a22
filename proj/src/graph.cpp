#include "isoprofile/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "isoprofile/errors.hpp"

namespace isoprofile {

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adjacency,
                            std::vector<std::int64_t> labels) {
  const std::size_t n = adjacency.size();
  if (n == 0) throw DomainError("graph must have at least one vertex");
  if (!labels.empty() && labels.size() != n)
    throw DomainError("label table size does not match vertex count");

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    auto& nbrs = adjacency[v];
    std::sort(nbrs.begin(), nbrs.end());
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const Vertex w = nbrs[i];
      if (w < 0 || static_cast<std::size_t>(w) >= n)
        throw DomainError("neighbor id " + std::to_string(w) + " out of range");
      if (static_cast<std::size_t>(w) == v)
        throw DomainError("self-loop at vertex " + std::to_string(v));
      if (i > 0 && nbrs[i - 1] == w)
        throw DomainError("parallel edge " + std::to_string(v) + "-" + std::to_string(w));
    }
    g.offsets_[v + 1] = g.offsets_[v] + nbrs.size();
    g.max_degree_ = std::max(g.max_degree_, static_cast<int>(nbrs.size()));
  }
  g.targets_.reserve(g.offsets_[n]);
  for (auto& nbrs : adjacency) g.targets_.insert(g.targets_.end(), nbrs.begin(), nbrs.end());

  for (std::size_t v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(static_cast<Vertex>(v)))
      if (!g.adjacent(w, static_cast<Vertex>(v)))
        throw DomainError("asymmetric adjacency " + std::to_string(v) + "->" + std::to_string(w));

  if (labels.empty()) {
    labels.resize(n);
    for (std::size_t v = 0; v < n; ++v) labels[v] = static_cast<std::int64_t>(v);
  }
  g.labels_ = std::move(labels);

  const auto dist = bfs_distances(g, 0);
  if (std::any_of(dist.begin(), dist.end(), [](int d) { return d < 0; }))
    throw ConnectivityError("graph is not connected");
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < static_cast<Vertex>(vertex_count()); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet::VertexSet(const Graph& g, std::span<const Vertex> members)
    : membership_(g.vertex_count(), 0) {
  for (Vertex v : members) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count())
      throw DomainError("vertex " + std::to_string(v) + " out of range");
    if (membership_[v]) continue;
    membership_[v] = 1;
    members_.push_back(v);
  }
  std::sort(members_.begin(), members_.end());
  for (Vertex v : members_) {
    volume_ += g.degree(v);
    for (Vertex w : g.neighbors(v))
      if (!membership_[w]) ++boundary_;
  }
}

VertexSet VertexSet::all(const Graph& g) {
  std::vector<Vertex> everything(g.vertex_count());
  for (std::size_t v = 0; v < everything.size(); ++v) everything[v] = static_cast<Vertex>(v);
  return VertexSet(g, everything);
}

VertexSet VertexSet::complement(const Graph& g) const {
  std::vector<Vertex> rest;
  for (std::size_t v = 0; v < membership_.size(); ++v)
    if (!membership_[v]) rest.push_back(static_cast<Vertex>(v));
  return VertexSet(g, rest);
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<int>> rows(g.vertex_count());
  for (std::size_t v = 0; v < rows.size(); ++v) rows[v] = bfs_distances(g, static_cast<Vertex>(v));
  return rows;
}

int set_diameter(const Graph& g, std::span<const Vertex> members) {
  int diameter = 0;
  for (Vertex u : members) {
    const auto dist = bfs_distances(g, u);
    for (Vertex v : members) diameter = std::max(diameter, dist[v]);
  }
  return diameter;
}

Rational boundary_volume_ratio(const Graph&, const VertexSet& w) {
  if (w.empty()) throw DomainError("boundary-to-volume ratio of an empty set");
  return Rational(w.boundary(), w.volume());
}

}  // namespace isoprofile
