#include "isoprofile/generators.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "isoprofile/errors.hpp"
#include "isoprofile/rng.hpp"

namespace isoprofile {
namespace {

void check_cap(double count, std::size_t cap, const std::string& what) {
  if (count > static_cast<double>(cap)) {
    std::ostringstream msg;
    msg << what << " would have " << count << " vertices, cap is " << cap;
    throw SizeError(msg.str());
  }
}

}  // namespace

Graph gen_torus(const std::vector<int>& sides, std::size_t vertex_cap) {
  if (sides.empty()) throw DomainError("torus needs at least one side length");
  double count = 1;
  for (int s : sides) {
    if (s < 3) throw DomainError("torus side lengths must be >= 3");
    count *= s;
  }
  check_cap(count, vertex_cap, "torus");
  const auto n = static_cast<std::size_t>(count);
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<std::size_t> stride(sides.size(), 1);
  for (std::size_t k = 1; k < sides.size(); ++k) stride[k] = stride[k - 1] * sides[k - 1];
  for (std::size_t v = 0; v < n; ++v) {
    adj[v].reserve(2 * sides.size());
    for (std::size_t k = 0; k < sides.size(); ++k) {
      const std::size_t coord = (v / stride[k]) % sides[k];
      const std::size_t base = v - coord * stride[k];
      const std::size_t up = (coord + 1) % sides[k];
      const std::size_t down = (coord + sides[k] - 1) % sides[k];
      adj[v].push_back(static_cast<Vertex>(base + up * stride[k]));
      adj[v].push_back(static_cast<Vertex>(base + down * stride[k]));
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

Graph gen_hypercube(int d) {
  if (d < 1 || d > 20) throw DomainError("hypercube dimension must be in [1, 20]");
  const std::size_t n = std::size_t{1} << d;
  std::vector<std::vector<Vertex>> adj(n);
  for (std::size_t v = 0; v < n; ++v)
    for (int k = 0; k < d; ++k) adj[v].push_back(static_cast<Vertex>(v ^ (std::size_t{1} << k)));
  return Graph::from_adjacency(std::move(adj));
}

Graph gen_complete(int k, std::size_t vertex_cap) {
  if (k < 2) throw DomainError("complete graph needs at least 2 vertices");
  check_cap(k, vertex_cap, "complete graph");
  std::vector<std::vector<Vertex>> adj(k);
  for (int u = 0; u < k; ++u)
    for (int v = 0; v < k; ++v)
      if (u != v) adj[u].push_back(v);
  return Graph::from_adjacency(std::move(adj));
}

Vertex lamplighter_vertex(int n, std::uint64_t lamps, int position) {
  return static_cast<Vertex>(static_cast<std::uint64_t>(position) + static_cast<std::uint64_t>(n) * lamps);
}

std::string lamplighter_label(int n, Vertex v) {
  const auto lamps = static_cast<std::uint64_t>(v) / n;
  const int position = static_cast<int>(v % n);
  std::string out;
  for (int i = 0; i < n; ++i) out.push_back(((lamps >> i) & 1) ? '1' : '0');
  return out + "," + std::to_string(position);
}

Graph gen_lamplighter_cycle(int n, std::size_t vertex_cap) {
  if (n < 3) throw DomainError("lamplighter base cycle must have length >= 3");
  if (n > 40) throw SizeError("lamplighter base cycle length " + std::to_string(n) + " exceeds cap");
  check_cap(static_cast<double>(n) * std::ldexp(1.0, n), vertex_cap, "lamplighter graph");
  const std::uint64_t configs = std::uint64_t{1} << n;
  std::vector<std::vector<Vertex>> adj(configs * n);
  for (std::uint64_t lamps = 0; lamps < configs; ++lamps) {
    for (int pos = 0; pos < n; ++pos) {
      auto& nbrs = adj[lamplighter_vertex(n, lamps, pos)];
      nbrs.push_back(lamplighter_vertex(n, lamps ^ (std::uint64_t{1} << pos), pos));
      nbrs.push_back(lamplighter_vertex(n, lamps, (pos + 1) % n));
      nbrs.push_back(lamplighter_vertex(n, lamps, (pos + n - 1) % n));
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

Graph gen_random_regular(int n, int d, std::uint64_t seed, int max_attempts, std::size_t vertex_cap) {
  if (n < 1 || d < 1) throw DomainError("random regular graph needs n >= 1 and d >= 1");
  if (d >= n) throw DomainError("degree must be smaller than vertex count");
  if ((static_cast<long long>(n) * d) % 2 != 0) throw DomainError("n * d must be even");
  check_cap(n, vertex_cap, "random regular graph");

  Engine eng(seed);
  std::vector<Vertex> stubs(static_cast<std::size_t>(n) * d);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    for (std::size_t i = 0; i < stubs.size(); ++i) stubs[i] = static_cast<Vertex>(i / d);
    for (std::size_t i = stubs.size() - 1; i > 0; --i)
      std::swap(stubs[i], stubs[uniform_below(eng, i + 1)]);

    std::vector<std::vector<Vertex>> adj(n);
    bool simple = true;
    for (std::size_t i = 0; i < stubs.size() && simple; i += 2) {
      const Vertex a = stubs[i], b = stubs[i + 1];
      if (a == b || std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end()) {
        simple = false;
        break;
      }
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    if (!simple) continue;
    try {
      return Graph::from_adjacency(std::move(adj));
    } catch (const ConnectivityError&) {
      continue;
    }
  }
  throw GenerationError("no simple connected " + std::to_string(d) + "-regular graph on " +
                        std::to_string(n) + " vertices after " + std::to_string(max_attempts) +
                        " attempts");
}

Graph load_edge_list(std::string_view text, std::size_t vertex_cap) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::int64_t> ids;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      std::int64_t id = 0;
      const auto token = line.substr(i, j - i);
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), id);
      if (ec != std::errc() || ptr != token.data() + token.size() || id < 0)
        throw ParseError(line_no, "expected a nonnegative integer id, got '" + std::string(token) + "'");
      ids.push_back(id);
      i = j;
    }
    if (ids.empty()) continue;
    if (ids.size() != 2) throw ParseError(line_no, "expected exactly two ids per line");
    if (ids[0] == ids[1]) throw ParseError(line_no, "self-loop at " + std::to_string(ids[0]));
    const auto key = std::minmax(ids[0], ids[1]);
    if (!seen.insert(key).second)
      throw ParseError(line_no, "duplicate edge " + std::to_string(ids[0]) + " " + std::to_string(ids[1]));
    raw.emplace_back(ids[0], ids[1]);
  }
  if (raw.empty()) throw ParseError(line_no, "edge list contains no edges");

  std::map<std::int64_t, Vertex> relabel;
  for (const auto& [a, b] : raw) {
    relabel.emplace(a, 0);
    relabel.emplace(b, 0);
  }
  check_cap(static_cast<double>(relabel.size()), vertex_cap, "edge list");
  std::vector<std::int64_t> labels;
  labels.reserve(relabel.size());
  for (auto& [original, index] : relabel) {
    index = static_cast<Vertex>(labels.size());
    labels.push_back(original);
  }
  std::vector<std::vector<Vertex>> adj(relabel.size());
  for (const auto& [a, b] : raw) {
    adj[relabel[a]].push_back(relabel[b]);
    adj[relabel[b]].push_back(relabel[a]);
  }
  return Graph::from_adjacency(std::move(adj), std::move(labels));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  for (const auto& [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
  return out.str();
}

std::vector<Edge> torus_orbit_pairs(const std::vector<int>& sides) {
  std::vector<Edge> pairs;
  Vertex stride = 1;
  for (int s : sides) {
    pairs.emplace_back(0, stride);
    stride *= s;
  }
  return pairs;
}

std::vector<Edge> hypercube_orbit_pairs(int d) {
  std::vector<Edge> pairs;
  for (int k = 0; k < d; ++k) pairs.emplace_back(0, Vertex{1} << k);
  return pairs;
}

std::vector<Edge> lamplighter_orbit_pairs(int n) {
  // Toggle and one move; the reverse move is the same orbit under inversion.
  return {{lamplighter_vertex(n, 0, 0), lamplighter_vertex(n, 1, 0)},
          {lamplighter_vertex(n, 0, 0), lamplighter_vertex(n, 0, 1)}};
}

}  // namespace isoprofile
