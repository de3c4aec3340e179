#include <doctest.h>

#include <random>

#include "diagnoscope/connectivity.hpp"
#include "diagnoscope/error.hpp"
#include "diagnoscope/families.hpp"
#include "oracles.hpp"

using namespace diagnoscope;

namespace {

Graph two_triangles() { return build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}); }

Graph triangles_with_bridge() { return add_edges(two_triangles(), EdgeSet{Edge(2, 3)}); }

void check_paths(const Graph& g, Vertex u, Vertex v, const DisjointPaths& p) {
  CHECK(static_cast<int>(p.paths.size()) == p.count);
  VertexSet used;
  for (const Path& path : p.paths) {
    REQUIRE(path.size() >= 2);
    CHECK(path.front() == u);
    CHECK(path.back() == v);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) CHECK(g.adjacent(path[i], path[i + 1]));
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      CHECK_FALSE(used.contains(path[i]));
      used.insert(path[i]);
    }
  }
}

}  // namespace

TEST_CASE("vertex_connectivity examples") {
  const auto k5 = vertex_connectivity(complete_graph(5));
  CHECK(k5.kappa == 4);
  CHECK(k5.witness_cut.empty());

  CHECK(vertex_connectivity(petersen_graph()).kappa == 3);
  CHECK(oracle::kappa(petersen_graph()) == 3);

  const auto split = vertex_connectivity(two_triangles());
  CHECK(split.kappa == 0);
  CHECK(split.witness_cut.empty());

  CHECK_THROWS_AS(vertex_connectivity(edgeless(0)), InvalidArgument);
  CHECK(vertex_connectivity(complete_graph(1)).kappa == 0);
}

TEST_CASE("the witness cut is a minimum cut") {
  for (const Graph& g : {hypercube(3), petersen_graph(), triangles_with_bridge(), complete_bipartite(3, 4),
                         cycle_graph(6), prism_graph(5), circulant_graph(8, {1, 2})}) {
    const auto report = vertex_connectivity(g);
    CHECK(report.witness_cut.size() == report.kappa);
    CHECK(disconnects(g, report.witness_cut));
    CHECK(report.kappa <= report.delta);
    CHECK(report.delta <= g.order() - 1);
  }
}

TEST_CASE("connectivity agrees with cut enumeration on random graphs") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 100 < 55) pairs.emplace_back(u, v);
      }
    }
    const Graph g = build_graph(n, pairs);
    CAPTURE(n);
    CHECK(vertex_connectivity(g).kappa == oracle::kappa(g));
  }
}

TEST_CASE("internally_disjoint_paths") {
  const Graph c4 = cycle_graph(4);
  const auto opposite = internally_disjoint_paths(c4, 0, 2);
  CHECK(opposite.count == 2);
  check_paths(c4, 0, 2, opposite);

  const Graph q3 = hypercube(3);
  const auto antipodal = internally_disjoint_paths(q3, 0, 7);
  CHECK(antipodal.count == 3);
  check_paths(q3, 0, 7, antipodal);

  const Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
  const auto ends = internally_disjoint_paths(p3, 0, 2);
  CHECK(ends.count == 1);
  CHECK(ends.paths == std::vector<Path>{{0, 1, 2}});

  const auto direct = internally_disjoint_paths(complete_graph(4), 0, 1);
  CHECK(direct.count == 3);
  check_paths(complete_graph(4), 0, 1, direct);

  CHECK_THROWS_AS(internally_disjoint_paths(q3, 2, 2), InvalidArgument);
}

TEST_CASE("Menger: kappa is the least local connectivity over non-adjacent pairs") {
  for (const Graph& g : {hypercube(3), hypercube(4), petersen_graph(), complete_bipartite(3, 3),
                         triangles_with_bridge(), prism_graph(5)}) {
    int least = g.order() - 1;
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) {
        if (!g.adjacent(u, v)) least = std::min(least, internally_disjoint_paths(g, u, v).count);
      }
    }
    CHECK(vertex_connectivity(g).kappa == least);
  }
}

TEST_CASE("Whitney: 2-connected graphs join every pair by two disjoint paths") {
  for (const Graph& g : {cycle_graph(5), hypercube(3), petersen_graph(), prism_graph(4)}) {
    REQUIRE(vertex_connectivity(g).kappa >= 2);
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) {
        const auto p = internally_disjoint_paths(g, u, v);
        CHECK(p.count >= 2);
        check_paths(g, u, v, p);
      }
    }
  }
}

TEST_CASE("edge deletion lowers connectivity by at most the number of edges") {
  std::mt19937_64 rng(31);
  const std::vector<Graph> hosts{hypercube(3), hypercube(4), petersen_graph(), complete_graph(6),
                                 complete_bipartite(4, 4), circulant_graph(8, {1, 2})};
  for (int trial = 0; trial < 200; ++trial) {
    const Graph& g = hosts[trial % hosts.size()];
    const int kappa = vertex_connectivity(g).kappa;
    EdgeSet f;
    const int count = static_cast<int>(rng() % (kappa + 1));
    while (static_cast<int>(f.size()) < count) {
      const Edge e = g.edges()[rng() % g.size()];
      if (std::find(f.begin(), f.end(), e) == f.end()) f.push_back(e);
    }
    std::sort(f.begin(), f.end());
    CHECK(vertex_connectivity(delete_edges(g, f)).kappa >= kappa - count);
  }
}

TEST_CASE("is_maximally_connected") {
  CHECK(is_maximally_connected(hypercube(4)));
  CHECK_FALSE(is_maximally_connected(triangles_with_bridge()));
  const auto bridge = vertex_connectivity(triangles_with_bridge());
  CHECK(bridge.delta == 2);
  CHECK(bridge.kappa == 1);
  for (int n = 1; n <= 7; ++n) CHECK(is_maximally_connected(complete_graph(n)));
}

TEST_CASE("local_connectivity") {
  CHECK(local_connectivity(hypercube(3), 0, 7) == 3);
  CHECK_THROWS_AS(local_connectivity(hypercube(3), 0, 1), InvalidArgument);
}

TEST_CASE("max_common_neighbors") {
  CHECK(max_common_neighbors(complete_graph(4)).value == 2);
  CHECK(max_common_neighbors(hypercube(3)).value == 2);
  const Graph g1 = join(complete_graph(3), edgeless(4));
  const auto c = max_common_neighbors(g1);
  CHECK(c.value == 5);
  CHECK((g1.neighbors(c.u) & g1.neighbors(c.v)).size() == 5);
  CHECK(oracle::common_neighbors(g1) == 5);
  CHECK(oracle::common_neighbors(hypercube(3)) == 2);
  CHECK(max_common_neighbors(petersen_graph()).value == 1);
  CHECK_THROWS_AS(max_common_neighbors(complete_graph(1)), InvalidArgument);
}
