#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "hfdiam/errors.hpp"
#include "hfdiam/oracle.hpp"
#include "hfdiam/structure.hpp"
#include "support.hpp"

using namespace hfdiam;
using namespace hfdiam::test;

TEST_CASE("brute_diameter on known shapes") {
  CHECK(brute_diameter(make_path(5)).diameter == 4);
  CHECK(brute_diameter(make_cycle(6)).diameter == 3);
  CHECK(brute_diameter(make_complete(7)).diameter == 1);
  CHECK(brute_diameter(Graph::from_edges(1, {})).diameter == 0);

  CHECK_THROWS_AS(brute_diameter(Graph::from_edges(0, {})), NotConnected);
  CHECK_THROWS_AS(brute_diameter(Graph::from_edges(
                      4, std::vector<std::pair<int, int>>{{0, 1}, {2, 3}})),
                  NotConnected);
}

TEST_CASE("brute_diameter pair and eccentricities are consistent") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 60; ++round) {
    const int n = 2 + static_cast<int>(rng() % 24);
    const Graph g = random_connected_graph(n, 0.2, rng);
    const OracleResult r = brute_diameter(g);
    const auto all = relaxation_all_pairs(g);
    int expected = 0;
    for (int u = 0; u < n; ++u) {
      CHECK(all[u][u] == 0);
      for (int v = 0; v < n; ++v) {
        CHECK(all[u][v] == all[v][u]);
        expected = std::max(expected, all[u][v]);
      }
      CHECK(r.eccentricities[u] ==
            *std::max_element(all[u].begin(), all[u].end()));
    }
    CHECK(r.diameter == expected);
    CHECK(all[r.pair.first][r.pair.second] == r.diameter);
  }
}

TEST_CASE("brute_contains_induced on fixed instances") {
  CHECK_FALSE(brute_contains_induced(make_path(5), parse_h_spec("P2+2P1")));
  CHECK(brute_contains_induced(make_path(7), parse_h_spec("2P2")));
  CHECK_FALSE(brute_contains_induced(make_complete(3), parse_h_spec("2P1")));
  CHECK(brute_contains_induced(make_path(7), parse_h_spec("P2+2P1")));
  CHECK_FALSE(brute_contains_induced(make_path(5), parse_h_spec("P4+P1")));

  CHECK_THROWS_AS(brute_contains_induced(make_path(13), parse_h_spec("2P1")),
                  TooLarge);
  CHECK_THROWS_AS(brute_contains_induced(make_path(5), parse_h_spec("P7")),
                  TooLarge);
}

TEST_CASE("containment oracle agrees with the pruned searcher") {
  std::mt19937_64 rng(5);
  const char* specs[] = {"3P1",  "4P1",    "P2+2P1", "P3+P1", "P4",
                         "2P2",  "P2+3P1", "P3+2P1", "2P2+P1", "P4+P1",
                         "P5+P1", "P6"};
  for (int round = 0; round < 300; ++round) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const Graph g = random_graph(n, 0.3, rng);
    for (const char* spec : specs) {
      const LinearForest h = parse_h_spec(spec);
      if (h.total() > 6) continue;
      const bool brute = brute_contains_induced(g, h);
      const auto found = find_induced_linear_forest(g, h);
      CHECK(brute == found.has_value());
    }
  }
}

TEST_CASE("enumerate_connected_graphs counts match the labeled sequence") {
  const std::uint64_t expected[] = {1, 1, 4, 38, 728};
  for (int n = 1; n <= 5; ++n) {
    ConnectedGraphEnumerator en(n);
    std::uint64_t count = 0;
    while (auto g = en.next()) {
      CHECK(g->vertex_count() == n);
      ++count;
    }
    CHECK(count == expected[n - 1]);
    CHECK(en.emitted() == count);
  }
  CHECK_THROWS_AS(ConnectedGraphEnumerator(9), TooLarge);
}

TEST_CASE("enumerated n=2 graph is the single edge") {
  ConnectedGraphEnumerator en(2);
  auto g = en.next();
  REQUIRE(g.has_value());
  CHECK(g->edge_count() == 1);
  CHECK_FALSE(en.next().has_value());
}
