#include <doctest.h>

#include <random>

#include "diagnoscope/error.hpp"
#include "diagnoscope/families.hpp"
#include "diagnoscope/graph.hpp"

using namespace diagnoscope;

namespace {

std::vector<int> degrees(const Graph& g) { return degree_profile(g).degrees; }

Graph random_graph(int n, int percent, std::mt19937_64& rng) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (static_cast<int>(rng() % 100) < percent) pairs.emplace_back(u, v);
    }
  }
  return build_graph(n, pairs);
}

}  // namespace

TEST_CASE("build_graph constructs simple graphs") {
  const Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
  CHECK(p3.size() == 2);
  CHECK(degrees(p3) == std::vector<int>{1, 1, 2});
  CHECK(p3.degree(0) == 1);
  CHECK(p3.degree(1) == 2);
  CHECK(p3.degree(2) == 1);

  const Graph single = build_graph(4, {{0, 1}, {1, 0}});
  CHECK(single.size() == 1);
  CHECK(single.has_edge(Edge(0, 1)));
}

TEST_CASE("build_graph rejects bad pairs and names them") {
  try {
    build_graph(2, {{0, 2}});
    FAIL("expected an error");
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find("(0,2)") != std::string::npos);
    CHECK(std::string(e.what()).find("out of range") != std::string::npos);
  }
  try {
    build_graph(3, {{1, 1}});
    FAIL("expected an error");
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find("(1,1)") != std::string::npos);
  }
  CHECK_THROWS_AS(build_graph(65, {}), InvalidArgument);
  CHECK_THROWS_AS(build_graph(-1, {}), InvalidArgument);
}

TEST_CASE("adjacency invariants hold on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(2 + static_cast<int>(rng() % 12), 40, rng);
    int degree_sum = 0;
    for (Vertex u = 0; u < g.order(); ++u) {
      degree_sum += g.degree(u);
      CHECK_FALSE(g.adjacent(u, u));
      for (Vertex v = 0; v < g.order(); ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
    CHECK(degree_sum == 2 * g.size());
  }
}

TEST_CASE("complement") {
  const Graph k4 = complement(edgeless(4));
  CHECK(k4 == complete_graph(4));
  CHECK(k4.size() == 6);

  // C5 is self-complementary: its complement is the pentagram, which is again a 5-cycle.
  const Graph c5 = cycle_graph(5);
  const Graph pentagram = complement(c5);
  CHECK(pentagram.size() == 5);
  CHECK(degrees(pentagram) == std::vector<int>(5, 2));
  for (Vertex i = 0; i < 5; ++i) CHECK(pentagram.has_edge(Edge(i, (i + 2) % 5)));
  const std::vector<Vertex> perm{0, 2, 4, 1, 3};
  CHECK(relabel(c5, perm) == pentagram);

  const Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
  CHECK(complement(complement(p3)) == p3);
}

TEST_CASE("complement is an involution on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(1 + static_cast<int>(rng() % 10), 50, rng);
    CHECK(complement(complement(g)) == g);
    CHECK(complement(g).size() + g.size() == g.order() * (g.order() - 1) / 2);
  }
}

TEST_CASE("join") {
  const Graph c4 = join(edgeless(2), edgeless(2));
  CHECK(c4.size() == 4);
  CHECK(degrees(c4) == std::vector<int>(4, 2));
  CHECK(c4.has_edge(Edge(0, 2)));
  CHECK(c4.has_edge(Edge(0, 3)));
  CHECK(c4.has_edge(Edge(1, 2)));
  CHECK(c4.has_edge(Edge(1, 3)));

  const Graph j = join(complete_graph(3), edgeless(4));
  CHECK(j.order() == 7);
  CHECK(j.size() == 15);

  const Graph g = build_graph(3, {{0, 1}, {1, 2}});
  CHECK(join(edgeless(0), g) == g);
}

TEST_CASE("join edge count on random graphs") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(static_cast<int>(rng() % 7), 50, rng);
    const Graph h = random_graph(static_cast<int>(rng() % 7), 50, rng);
    CHECK(join(g, h).size() == g.size() + h.size() + g.order() * h.order());
  }
}

TEST_CASE("star_r") {
  const Graph k1 = complete_graph(1);
  CHECK(star_r(k1, k1, std::vector<std::pair<Vertex, Vertex>>{}) == edgeless(2));
  CHECK(star_r(k1, k1, std::vector<std::pair<Vertex, Vertex>>{{0, 0}}) == complete_graph(2));

  const Graph k2 = complete_graph(2);
  const Graph c4 = star_r(k2, k2, std::vector<std::pair<Vertex, Vertex>>{{0, 0}, {1, 1}});
  CHECK(c4.edges() == EdgeSet{Edge(0, 1), Edge(0, 2), Edge(1, 3), Edge(2, 3)});
  CHECK(degrees(c4) == std::vector<int>(4, 2));

  CHECK_THROWS_AS(star_r(k2, k2, std::vector<std::pair<Vertex, Vertex>>{{0, 2}}), InvalidArgument);
  CHECK_THROWS_AS(star_r(k2, k2, std::vector<std::pair<Vertex, Vertex>>{{2, 0}}), InvalidArgument);
}

TEST_CASE("star_1") {
  const Graph star = star_1(edgeless(3), complete_graph(2), std::vector<Vertex>{0, 0, 0});
  CHECK(star.edges() == EdgeSet{Edge(0, 3), Edge(1, 3), Edge(2, 3), Edge(3, 4)});

  CHECK(star_1(edgeless(1), complete_graph(1), std::vector<Vertex>{0}) == complete_graph(2));

  const Graph p4 = star_1(edgeless(2), complete_graph(2), std::vector<Vertex>{0, 1});
  CHECK(p4.edges() == EdgeSet{Edge(0, 2), Edge(1, 3), Edge(2, 3)});
  CHECK(degrees(p4) == std::vector<int>{1, 1, 2, 2});

  CHECK_THROWS_AS(star_1(edgeless(3), complete_graph(2), std::vector<Vertex>{0, 1}), InvalidArgument);
}

TEST_CASE("star_1 gives each left vertex one neighbor on the right") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(1 + static_cast<int>(rng() % 6), 50, rng);
    const Graph h = random_graph(1 + static_cast<int>(rng() % 6), 50, rng);
    std::vector<Vertex> assign;
    for (int v = 0; v < g.order(); ++v) assign.push_back(static_cast<Vertex>(rng() % h.order()));
    const Graph s = star_1(g, h, assign);
    const VertexSet right = VertexSet::range(g.order() + h.order()) - VertexSet::range(g.order());
    for (Vertex v = 0; v < g.order(); ++v) CHECK((s.neighbors(v) & right).size() == 1);
  }
}

TEST_CASE("delete_edges") {
  const Graph k3 = complete_graph(3);
  const Graph p3 = delete_edges(k3, EdgeSet{Edge(0, 1)});
  CHECK(p3.edges() == EdgeSet{Edge(0, 2), Edge(1, 2)});
  CHECK(delete_edges(k3, EdgeSet{}) == k3);

  const Graph p4 = delete_edges(cycle_graph(4), EdgeSet{Edge(0, 3)});
  CHECK(p4.edges() == EdgeSet{Edge(0, 1), Edge(1, 2), Edge(2, 3)});

  CHECK_THROWS_AS(delete_edges(p3, EdgeSet{Edge(0, 1)}), InvalidArgument);
}

TEST_CASE("delete then re-add restores the graph") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(2 + static_cast<int>(rng() % 10), 50, rng);
    EdgeSet f;
    for (const Edge& e : g.edges()) {
      if (rng() % 3 == 0) f.push_back(e);
    }
    CHECK(add_edges(delete_edges(g, f), f) == g);
  }
}

TEST_CASE("induced_subgraph") {
  CHECK(induced_subgraph(complete_graph(4), VertexSet{0, 1, 2}).graph == complete_graph(3));
  const auto p = induced_subgraph(build_graph(3, {{0, 1}, {1, 2}}), VertexSet{0, 2});
  CHECK(p.graph == edgeless(2));
  CHECK(p.remap == std::vector<Vertex>{0, -1, 1});
  CHECK(p.origin == std::vector<Vertex>{0, 2});
  const Graph q = hypercube(3);
  CHECK(induced_subgraph(q, q.vertices()).graph == q);
}

TEST_CASE("induced_subgraph preserves adjacency") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(2 + static_cast<int>(rng() % 12), 50, rng);
    const VertexSet keep(rng() & VertexSet::range(g.order()).bits());
    const auto sub = induced_subgraph(g, keep);
    CHECK(sub.graph.order() == keep.size());
    for (Vertex a = 0; a < sub.graph.order(); ++a) {
      for (Vertex b = 0; b < sub.graph.order(); ++b) {
        CHECK(sub.graph.adjacent(a, b) == g.adjacent(sub.origin[a], sub.origin[b]));
      }
    }
  }
}

TEST_CASE("degree_profile") {
  const auto q3 = degree_profile(hypercube(3));
  CHECK(q3.min_degree == 3);
  CHECK(q3.degrees == std::vector<int>(8, 3));
  CHECK(q3.regular);

  const auto g1 = degree_profile(join(complete_graph(3), edgeless(4)));
  CHECK(g1.min_degree == 3);
  CHECK(g1.degrees == std::vector<int>{3, 3, 3, 3, 6, 6, 6});
  CHECK_FALSE(g1.regular);

  const auto k1 = degree_profile(complete_graph(1));
  CHECK(k1.min_degree == 0);
  CHECK(k1.degrees == std::vector<int>{0});
  CHECK(k1.regular);

  CHECK_THROWS_AS(degree_profile(edgeless(0)), InvalidArgument);
}

TEST_CASE("vertex sets") {
  const VertexSet a{0, 2, 5};
  const VertexSet b{2, 3};
  CHECK((a | b) == VertexSet{0, 2, 3, 5});
  CHECK((a & b) == VertexSet{2});
  CHECK((a - b) == VertexSet{0, 5});
  CHECK((a ^ b) == VertexSet{0, 3, 5});
  CHECK(a.members() == std::vector<Vertex>{0, 2, 5});
  CHECK(lex_less(VertexSet{0, 5}, VertexSet{1}));
  CHECK(lex_less(VertexSet{1}, VertexSet{1, 2}));
  CHECK_FALSE(lex_less(VertexSet{1, 2}, VertexSet{1, 2}));
  CHECK(VertexSet::range(64).size() == 64);
}

TEST_CASE("relabel and disconnects") {
  const Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
  const Graph moved = relabel(p3, std::vector<Vertex>{1, 0, 2});
  CHECK(moved.edges() == EdgeSet{Edge(0, 1), Edge(0, 2)});
  CHECK(disconnects(p3, VertexSet{1}));
  CHECK_FALSE(disconnects(p3, VertexSet{0}));
  CHECK(disconnects(p3, VertexSet{0, 1}));
  CHECK(is_connected(p3));
  CHECK_FALSE(is_connected(edgeless(2)));
}
