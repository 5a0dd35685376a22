#include "doctest.h"

#include <algorithm>

#include "isoprofile/errors.hpp"
#include "isoprofile/generators.hpp"
#include "isoprofile/graph.hpp"
#include "isoprofile/isoperimetry.hpp"
#include "oracles.hpp"

using namespace isoprofile;

namespace {

void check_regular(const Graph& g, int degree) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(static_cast<Vertex>(v)) == degree);
}

void check_symmetric(const Graph& g) {
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (Vertex w : g.neighbors(static_cast<Vertex>(u))) CHECK(g.adjacent(w, static_cast<Vertex>(u)));
}

}  // namespace

TEST_CASE("torus generator") {
  const auto c4 = gen_torus({4});
  CHECK(c4.vertex_count() == 4);
  check_regular(c4, 2);
  const auto t33 = gen_torus({3, 3});
  CHECK(t33.vertex_count() == 9);
  check_regular(t33, 4);
  const auto t16 = gen_torus({16, 16});
  CHECK(t16.vertex_count() == 256);
  CHECK(t16.edge_count() == 512);
  check_symmetric(t16);
  CHECK_THROWS_AS(gen_torus({2}), DomainError);
  CHECK_THROWS_AS(gen_torus({100, 100}, 1000), SizeError);
}

TEST_CASE("hypercube generator") {
  const auto k2 = gen_hypercube(1);
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 1);
  const auto q2 = gen_hypercube(2);
  CHECK(q2.vertex_count() == 4);
  check_regular(q2, 2);
  const auto q3 = gen_hypercube(3);
  CHECK(q3.vertex_count() == 8);
  CHECK(q3.edge_count() == 12);
  check_regular(q3, 3);
}

TEST_CASE("lamplighter generator") {
  const auto g = gen_lamplighter_cycle(3);
  CHECK(g.vertex_count() == 24);
  check_regular(g, 3);
  check_symmetric(g);
  const Vertex origin = lamplighter_vertex(3, 0, 0);
  std::vector<std::string> names;
  for (Vertex w : g.neighbors(origin)) names.push_back(lamplighter_label(3, w));
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"000,1", "000,2", "100,0"});
  CHECK_THROWS_AS(gen_lamplighter_cycle(20), SizeError);
}

TEST_CASE("random regular generator") {
  const auto k4 = gen_random_regular(4, 3, 7);
  CHECK(k4.edge_count() == 6);
  const auto g = gen_random_regular(10, 3, 1);
  check_regular(g, 3);
  check_symmetric(g);
  const auto again = gen_random_regular(10, 3, 1);
  CHECK(g.edges() == again.edges());
  CHECK_THROWS_AS(gen_random_regular(5, 3, 1), DomainError);
}

TEST_CASE("edge list loading") {
  const auto k2 = load_edge_list("0 1");
  CHECK(k2.vertex_count() == 2);
  const auto tri = load_edge_list("# triangle\n0 1\n1 2\n\n  2   0  \n");
  CHECK(tri.edge_count() == 3);
  CHECK_THROWS_AS(load_edge_list("0 0"), ParseError);
  CHECK_THROWS_AS(load_edge_list("0 1\n1 0"), ParseError);
  CHECK_THROWS_AS(load_edge_list("0 1\n2 3"), ConnectivityError);
  try {
    load_edge_list("0 1\n1 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  const auto relabeled = load_edge_list("10 30\n30 20\n");
  CHECK(relabeled.label(0) == 10);
  CHECK(relabeled.label(2) == 30);
  CHECK(load_edge_list(to_edge_list(relabeled)).edges() == relabeled.edges());
}

TEST_CASE("bfs distances") {
  CHECK(bfs_distances(gen_torus({4}), 0) == std::vector<int>{0, 1, 2, 1});
  CHECK(bfs_distances(gen_complete(2), 0) == std::vector<int>{0, 1});
  const auto t = gen_torus({16, 16});
  CHECK(bfs_distances(t, 0)[8 + 16 * 8] == 16);
}

TEST_CASE("bfs distances satisfy the triangle inequality") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto g = oracle::random_connected_graph(12, 8, seed);
    const auto d = all_pairs_distances(g);
    for (std::size_t a = 0; a < 12; ++a)
      for (std::size_t b = 0; b < 12; ++b)
        for (std::size_t c = 0; c < 12; ++c) CHECK(d[a][c] <= d[a][b] + d[b][c]);
  }
}

TEST_CASE("boundary to volume ratio") {
  const auto c4 = gen_torus({4});
  CHECK(boundary_volume_ratio(c4, VertexSet::all(c4)) == 0);
  const Vertex one[] = {0};
  CHECK(boundary_volume_ratio(c4, VertexSet(c4, one)) == 1);
  const auto c6 = gen_torus({6});
  const Vertex arc[] = {0, 1, 2};
  CHECK(boundary_volume_ratio(c6, VertexSet(c6, arc)) == Rational(1, 3));
  CHECK_THROWS_AS(boundary_volume_ratio(c6, VertexSet(c6, {})), DomainError);
}

TEST_CASE("vertex set invariants on random sets") {
  Engine eng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = oracle::random_connected_graph(10, 6, 100 + trial);
    std::vector<Vertex> members;
    for (Vertex v = 0; v < 10; ++v)
      if (eng() & 1) members.push_back(v);
    const VertexSet w(g, members);
    std::int64_t volume = 0, boundary = 0;
    for (Vertex v : members) volume += g.degree(v);
    for (const auto& [a, b] : g.edges()) boundary += w.contains(a) != w.contains(b);
    CHECK(w.volume() == volume);
    CHECK(w.boundary() == boundary);
    CHECK(w.complement(g).boundary() == w.boundary());
  }
}

TEST_CASE("isoperimetric profile examples") {
  const auto k2 = gen_complete(2);
  const auto pk2 = isoperimetric_profile_bruteforce(k2, 2);
  CHECK(*pk2.at(1) == 1);
  CHECK(*pk2.at(2) == 0);
  const auto c6 = gen_torus({6});
  CHECK(*isoperimetric_profile_bruteforce(c6, 6).at(6) == Rational(1, 3));
  for (const auto& g : {gen_torus({5}), gen_hypercube(3), gen_torus({3, 3})})
    CHECK(*isoperimetric_profile_bruteforce(g, g.total_volume()).at(g.total_volume()) == 0);
}

TEST_CASE("connected enumeration matches the exhaustive profile") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto g = oracle::random_connected_graph(9 + seed % 4, seed % 7, seed);
    const auto cap = g.total_volume();
    const auto exhaustive = isoperimetric_profile_exhaustive(g, cap);
    const auto connected = isoperimetric_profile_connected(g, cap);
    for (std::int64_t n = 1; n <= cap; ++n) CHECK(exhaustive.at(n) == connected.at(n));
  }
}

TEST_CASE("isoperimetric profile is non-increasing") {
  const auto g = gen_lamplighter_cycle(3);
  const auto profile = isoperimetric_profile_connected(g, 30);
  std::optional<Rational> previous;
  for (std::int64_t n = 1; n <= 30; ++n) {
    const auto value = profile.at(n);
    if (previous && value) CHECK(*value <= *previous);
    if (value) previous = value;
  }
  CHECK_THROWS_AS(isoperimetric_profile_connected(g, 72, 10), BudgetError);
}
