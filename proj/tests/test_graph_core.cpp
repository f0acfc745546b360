#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "hfdiam/bfs.hpp"
#include "hfdiam/errors.hpp"
#include "hfdiam/graph.hpp"
#include "hfdiam/graph_algos.hpp"
#include "hfdiam/oracle.hpp"
#include "support.hpp"

using namespace hfdiam;
using namespace hfdiam::test;

TEST_CASE("build_graph canonicalizes and validates") {
  const Graph p3 = Graph::from_edges(3, std::vector<std::pair<int, int>>{
                                            {0, 1}, {1, 2}});
  CHECK(p3.vertex_count() == 3);
  CHECK(p3.edge_count() == 2);

  const Graph k4 = make_complete(4);
  CHECK(k4.edge_count() == 6);
  for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);

  CHECK_THROWS_AS(Graph::from_edges(2, std::vector<std::pair<int, int>>{
                                           {0, 0}}),
                  InvalidEdge);
  CHECK_THROWS_AS(Graph::from_edges(2, std::vector<std::pair<int, int>>{
                                           {0, 2}}),
                  InvalidEdge);

  // duplicates in both orientations collapse
  const Graph dup = Graph::from_edges(3, std::vector<std::pair<int, int>>{
                                             {1, 0}, {0, 1}, {2, 1}, {1, 2}});
  CHECK(dup.edge_count() == 2);
  CHECK(std::ranges::is_sorted(dup.neighbors(1)));
}

TEST_CASE("edge round-trip reproduces the canonical multiset") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    const Graph g = random_graph(12, 0.3, rng);
    const auto emitted = g.edges();
    const Graph again = Graph::from_edges(g.vertex_count(), emitted);
    CHECK(again.edges() == emitted);
    CHECK(again.edge_count() == g.edge_count());
  }
}

TEST_CASE("bfs on small shapes") {
  const Graph p5 = make_path(5);
  const BfsLayers l = bfs(p5, 0);
  CHECK(l.eccentricity == 4);
  CHECK(l.dist == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(path_to(l, 4) == std::vector<int>{0, 1, 2, 3, 4});

  CHECK(bfs(make_complete(4), 2).eccentricity == 1);
  CHECK(bfs(make_cycle(6), 0).eccentricity == 3);
  CHECK_THROWS_AS(bfs(p5, 5), InvalidVertex);
  CHECK_THROWS_AS(bfs(p5, -1), InvalidVertex);
}

TEST_CASE("bfs parent structure is a shortest-path tree") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 30; ++round) {
    const Graph g = random_connected_graph(20, 0.15, rng);
    const BfsLayers l = bfs(g, 3);
    CHECK(l.dist[3] == 0);
    for (int v = 0; v < 20; ++v) {
      if (v == 3) continue;
      REQUIRE(l.dist[v] > 0);
      CHECK(l.dist[v] == l.dist[l.parent[v]] + 1);
      CHECK(g.has_edge(v, l.parent[v]));
    }
  }
}

TEST_CASE("bfs distances match the relaxation oracle exhaustively to n=7") {
  for (int n = 1; n <= 7; ++n) {
    ConnectedGraphEnumerator en(n);
    while (auto g = en.next()) {
      const BfsLayers l = bfs(*g, 0);
      CHECK(l.dist == relaxation_distances(*g, 0));
    }
  }
}

TEST_CASE("bfs distances match the relaxation oracle on random graphs") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 500; ++round) {
    const int n = 2 + static_cast<int>(rng() % 49);
    const Graph g = random_graph(n, 0.12, rng);  // may be disconnected
    const int source = static_cast<int>(rng() % n);
    CHECK(bfs(g, source).dist == relaxation_distances(g, source));
  }
}

TEST_CASE("is_connected") {
  CHECK(is_connected(make_path(5)));
  CHECK(is_connected(Graph::from_edges(1, {})));
  CHECK(is_connected(Graph::from_edges(0, {})));
  const Graph two_edges = Graph::from_edges(
      4, std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
  CHECK_FALSE(is_connected(two_edges));
}

TEST_CASE("is_clique") {
  CHECK(is_clique(make_complete(4)));
  CHECK_FALSE(is_clique(make_path(3)));
  CHECK(is_clique(Graph::from_edges(1, {})));
}

TEST_CASE("connected components with and without restriction") {
  const Graph c6 = make_cycle(6);
  const Partition independent =
      connected_components(c6, std::vector<int>{0, 2, 4});
  CHECK(canonical_classes(independent) ==
        std::vector<std::vector<int>>{{0}, {2}, {4}});

  const Graph p5 = make_path(5);
  const Partition split =
      connected_components(p5, std::vector<int>{0, 1, 3, 4});
  CHECK(canonical_classes(split) ==
        std::vector<std::vector<int>>{{0, 1}, {3, 4}});

  CHECK(connected_components(make_complete(4)).class_count() == 1);
}

TEST_CASE("component classes cover, are disjoint, and have no cross edges") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 100; ++round) {
    const int n = 3 + static_cast<int>(rng() % 20);
    const Graph g = random_graph(n, 0.15, rng);
    std::vector<int> restrict;
    for (int v = 0; v < n; ++v)
      if (rng() % 2) restrict.push_back(v);
    const Partition p = connected_components(g, restrict);

    std::set<int> seen;
    for (const auto& cls : p.classes) {
      CHECK_FALSE(cls.empty());
      for (int v : cls) CHECK(seen.insert(v).second);
    }
    CHECK(seen == std::set<int>(restrict.begin(), restrict.end()));
    for (const auto& [u, v] : g.edges()) {
      if (p.class_of[u] < 0 || p.class_of[v] < 0) continue;
      CHECK(p.class_of[u] == p.class_of[v]);
    }
  }
}
