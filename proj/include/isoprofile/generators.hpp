#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "isoprofile/graph.hpp"

namespace isoprofile {

/// d-dimensional discrete torus; vertex index is mixed radix with the first
/// coordinate fastest. Every side must be at least 3.
Graph gen_torus(const std::vector<int>& sides, std::size_t vertex_cap = kDefaultVertexCap);

/// Hypercube {0,1}^d, 1 <= d <= 20; vertex index is the bit pattern.
Graph gen_hypercube(int d);

/// Complete graph on k >= 2 vertices.
Graph gen_complete(int k, std::size_t vertex_cap = kDefaultVertexCap);

/// Lamplighter over the n-cycle: vertex (lamps, position) has index
/// position + n * lamps, where bit i of `lamps` is the lamp at site i.
/// Edges toggle the lamp under the lighter or move the lighter by one.
Graph gen_lamplighter_cycle(int n, std::size_t vertex_cap = kDefaultVertexCap);

Vertex lamplighter_vertex(int n, std::uint64_t lamps, int position);
/// Renders a lamplighter vertex as e.g. "100,0" (site 0 leftmost).
std::string lamplighter_label(int n, Vertex v);

/// Uniform-ish simple connected d-regular graph via the configuration model,
/// resampled until simple and connected. Deterministic given the seed.
Graph gen_random_regular(int n, int d, std::uint64_t seed, int max_attempts = 10000,
                         std::size_t vertex_cap = kDefaultVertexCap);

/// Parses "u v" lines ('#' starts a comment, blank lines ignored). Ids are
/// relabeled to 0..n-1 in increasing order of original id; the original ids
/// are kept as vertex labels.
Graph load_edge_list(std::string_view text, std::size_t vertex_cap = kDefaultVertexCap);

/// Edge list text in the format accepted by load_edge_list, using labels.
std::string to_edge_list(const Graph& g);

/// Neighbor pairs that represent every edge orbit of a generated Cayley graph,
/// for use as a transitive hint in profile computations.
std::vector<Edge> torus_orbit_pairs(const std::vector<int>& sides);
std::vector<Edge> hypercube_orbit_pairs(int d);
std::vector<Edge> lamplighter_orbit_pairs(int n);

}  // namespace isoprofile
