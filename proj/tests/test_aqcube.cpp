#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "aqcross/aqcube.hpp"

using namespace aqcross;

TEST_CASE("small cubes have the right shape") {
  const AugmentedCube g2(2);
  CHECK(g2.vertex_count() == 4);
  CHECK(g2.edges().size() == 6);  // complete on 4 vertices
  for (Vertex a = 0; a < 4; ++a)
    for (Vertex b = 0; b < 4; ++b)
      if (a != b) CHECK(g2.adjacent(a, b));

  const AugmentedCube g3(3);
  CHECK(g3.vertex_count() == 8);
  CHECK(g3.edges().size() == 20);
  CHECK(g3.edge_count() == 20);
  for (Vertex a = 0; a < 8; ++a) CHECK(g3.neighbors(a).size() == 5);

  const AugmentedCube g5(5);
  CHECK(g5.vertex_count() == 32);
  CHECK(g5.edges().size() == 144);
}

TEST_CASE("invalid dimension is rejected") {
  CHECK_THROWS_AS(AugmentedCube(0), std::invalid_argument);
  CHECK_THROWS_AS(AugmentedCube(-3), std::invalid_argument);
  CHECK_THROWS_AS(edges_recursive(0), std::invalid_argument);
}

TEST_CASE("dimension labels") {
  CHECK(dim_raw(0b000, 0b100) == 3);
  CHECK(dim_raw(0b000, 0b111) == -3);
  CHECK(dim_raw(0b000, 0b001) == 1);
  CHECK(dim_raw(5, 5) == 0);

  CHECK(dim(VertexLabel{0, 3}, VertexLabel{4, 3}) == 3);
  CHECK_THROWS_AS(dim(VertexLabel{0, 3}, VertexLabel{0, 4}), std::invalid_argument);

  // symmetric, and edge labels stay in the allowed set (exhaustive, small n)
  for (int n = 1; n <= 6; ++n) {
    const AugmentedCube g(n);
    for (const Edge& e : g.edges()) {
      CHECK(dim_raw(e.a, e.b) == dim_raw(e.b, e.a));
      CHECK(e.dim != 0);
      CHECK(e.dim != -1);
      CHECK(std::abs(e.dim) <= n);
    }
  }
}

TEST_CASE("incident edges along each dimension") {
  const AugmentedCube g3(3);
  CHECK(g3.incident_edge(0b000, -2) == Edge{0b000, 0b011, -2});
  CHECK(g3.incident_edge(0b000, 3) == Edge{0b000, 0b100, 3});

  const AugmentedCube g5(5);
  CHECK(g5.incident_edge(0b10101, -4) == Edge{0b10101, 0b11010, -4});
  CHECK(dim_raw(0b10101, 0b11010) == -4);

  CHECK_THROWS_AS(g3.neighbor_along(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(g3.neighbor_along(0, -1), std::invalid_argument);
  CHECK_THROWS_AS(g3.neighbor_along(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(g3.neighbor_along(0, -4), std::invalid_argument);

  // existence and uniqueness across all vertices and labels
  for (Vertex a = 0; a < 8; ++a) {
    std::set<Vertex> seen;
    for (int t : {-3, -2, 1, 2, 3}) {
      const Edge e = g3.incident_edge(a, t);
      CHECK(e.dim == t);
      seen.insert(a == e.a ? e.b : e.a);
    }
    CHECK(seen.size() == 5);
  }
}

TEST_CASE("edges between vertex sets") {
  const AugmentedCube g3(3);
  const std::vector<Vertex> empty;
  std::vector<Vertex> all(8);
  for (Vertex v = 0; v < 8; ++v) all[v] = v;
  CHECK(edges_between(g3, empty, all).empty());

  const std::vector<Vertex> evens = {0b000, 0b011, 0b101, 0b110};
  const std::vector<Vertex> odds = {0b001, 0b010, 0b100, 0b111};
  CHECK(edges_between(g3, evens, odds).size() == 16);

  const std::vector<Vertex> pair = {0b000, 0b001};
  const auto internal = edges_between(g3, pair, pair);
  REQUIRE(internal.size() == 1);
  CHECK(internal[0] == Edge{0, 1, 1});
}

TEST_CASE("edge sets between random vertex sets match a pair scan") {
  std::mt19937 rng(77);
  const AugmentedCube g(6);
  const Vertex vmax = 64;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vertex> A, B;
    for (Vertex v = 0; v < vmax; ++v) {
      if (rng() % 3 == 0) A.push_back(v);
      if (rng() % 3 == 0) B.push_back(v);  // sets may overlap
    }
    std::set<std::pair<Vertex, Vertex>> want;
    for (Vertex a : A)
      for (Vertex b : B)
        if (adjacent_raw(a, b)) want.insert({std::min(a, b), std::max(a, b)});
    const auto got = edges_between(g, A, B);
    CHECK(got.size() == want.size());
    for (const Edge& e : got) CHECK(want.count({e.a, e.b}) == 1);
  }
}

TEST_CASE("recursive and direct constructions agree") {
  for (int n = 1; n <= 9; ++n) {
    const AugmentedCube g(n);
    CHECK(g.edges() == edges_recursive(n));
  }
}

TEST_CASE("complete bipartite witness in AQ_3") {
  const K44Witness w = find_k44_witness();
  CHECK(w.left == std::array<Vertex, 4>{0b000, 0b011, 0b101, 0b110});
  CHECK(w.right == std::array<Vertex, 4>{0b001, 0b010, 0b100, 0b111});
  CHECK(is_k44_split(w.left, w.right));

  // a lexicographic split fails: 000 and 101 are not adjacent
  CHECK_FALSE(is_k44_split({0b000, 0b001, 0b010, 0b011},
                           {0b100, 0b101, 0b110, 0b111}));
}

TEST_CASE("edge list export") {
  std::ostringstream os;
  write_edge_list(os, AugmentedCube(2));
  CHECK(os.str() == "0 1 1\n0 2 2\n0 3 -2\n1 2 -2\n1 3 2\n2 3 1\n");
}
