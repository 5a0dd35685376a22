#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "isoprofile/graph.hpp"

namespace isoprofile {

struct GraphInstance {
  std::string spec;
  Graph graph;
  /// Edge-orbit representatives when the generator is vertex transitive.
  std::vector<Edge> orbit_pairs;
  bool transitive() const { return !orbit_pairs.empty(); }
};

/// Builds a graph from a spec string:
///   torus:16,16   cycle:12   hypercube:3   complete:2   lamplighter:3
///   random-regular:20,3[,seed]   edges:path/to/file
/// Unknown generators and malformed parameters raise UsageError.
GraphInstance build_graph(std::string_view spec, std::size_t vertex_cap = kDefaultVertexCap);

/// "u,v" into a vertex pair.
Edge parse_pair(std::string_view text);

}  // namespace isoprofile
