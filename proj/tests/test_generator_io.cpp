#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>

#include "doctest.h"
#include "hfdiam/bench_harness.hpp"
#include "hfdiam/errors.hpp"
#include "hfdiam/generator.hpp"
#include "hfdiam/graph_algos.hpp"
#include "hfdiam/io.hpp"
#include "hfdiam/structure.hpp"
#include "support.hpp"

using namespace hfdiam;
using namespace hfdiam::test;

TEST_CASE("edge-list parsing") {
  std::istringstream p3("3 2\n0 1\n1 2\n");
  const Graph g = parse_edge_list(p3);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);

  std::istringstream k4("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  CHECK(is_clique(parse_edge_list(k4)));

  std::istringstream with_comments("# header\n3 1\n\n0 1 # trailing\n");
  CHECK(parse_edge_list(with_comments).edge_count() == 1);

  std::istringstream self_loop("2 1\n0 0\n");
  CHECK_THROWS_AS(parse_edge_list(self_loop), ParseError);
  std::istringstream short_file("3 2\n0 1\n");
  CHECK_THROWS_AS(parse_edge_list(short_file), ParseError);
  std::istringstream long_file("3 1\n0 1\n1 2\n");
  CHECK_THROWS_AS(parse_edge_list(long_file), ParseError);
  std::istringstream out_of_range("2 1\n0 5\n");
  CHECK_THROWS_AS(parse_edge_list(out_of_range), ParseError);
  std::istringstream garbage("3 1\nx y\n");
  CHECK_THROWS_AS(parse_edge_list(garbage), ParseError);
  std::istringstream empty("");
  CHECK_THROWS_AS(parse_edge_list(empty), ParseError);
}

TEST_CASE("edge-list write/parse round trip") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 30; ++round) {
    const Graph g = random_graph(15, 0.3, rng);
    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream in(out.str());
    const Graph back = parse_edge_list(in);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
  }
}

TEST_CASE("generator output is connected, sized, and H-free") {
  const char* specs[] = {"P2+2P1", "3P1",    "P3+P1",  "P4", "4P1",
                         "P4+P1",  "P3+2P1", "P2+3P1", "2P2+P1"};
  for (const char* spec : specs) {
    const LinearForest h = parse_h_spec(spec);
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      const int n = 5 + static_cast<int>(seed) * 4;
      const GenResult gen = generate_hfree(h, n, seed);
      CHECK(gen.graph.vertex_count() == n);
      CHECK(is_connected(gen.graph));
      CHECK_FALSE(find_induced_linear_forest(gen.graph, h).has_value());
    }
  }
}

TEST_CASE("gen output survives a write/parse round trip identically") {
  for (const char* spec : {"P2+2P1", "4P1", "2P2+P1"}) {
    const Graph g = generate_hfree(parse_h_spec(spec), 40, 11).graph;
    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream in(out.str());
    const Graph back = parse_edge_list(in);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
  }
}

TEST_CASE("generator is deterministic per seed") {
  const LinearForest h = parse_h_spec("P4+P1");
  const Graph a = generate_hfree(h, 30, 42).graph;
  const Graph b = generate_hfree(h, 30, 42).graph;
  CHECK(a.edges() == b.edges());
  const Graph c = generate_hfree(h, 30, 43).graph;
  const bool differs = c.edges() != a.edges();
  CHECK(differs);
}

TEST_CASE("generator fallbacks handle the degenerate classes") {
  // no P1-free graph exists on n >= 1
  GenOptions no_attempts;
  no_attempts.attempts = 0;
  CHECK_THROWS_AS(generate_hfree(parse_h_spec("P1"), 5, 0, no_attempts),
                  TooLarge);
  // connected P2-free graphs exist only at n = 1
  CHECK(generate_hfree(parse_h_spec("P2"), 1, 0, no_attempts)
            .graph.vertex_count() == 1);
  CHECK_THROWS_AS(generate_hfree(parse_h_spec("P2"), 3, 0, no_attempts),
                  TooLarge);
  // P3-free fallback is a clique
  CHECK(is_clique(generate_hfree(parse_h_spec("P3"), 6, 0, no_attempts).graph));
  // kP1 fallback keeps independence below k
  const Graph chain =
      generate_hfree(parse_h_spec("4P1"), 24, 1, no_attempts).graph;
  CHECK(is_connected(chain));
  CHECK_FALSE(find_induced_linear_forest(chain, parse_h_spec("4P1")));
  // star fallback for everything else
  const Graph star =
      generate_hfree(parse_h_spec("P2+2P1"), 1000, 1, no_attempts).graph;
  CHECK(star.edge_count() == 999);
  CHECK_FALSE(find_induced_linear_forest(star, parse_h_spec("P2+2P1")));
}

TEST_CASE("bench suite emits the fixed CSV layout") {
  BenchOptions options;
  options.sizes = {100};
  options.repetitions = 3;
  std::ostringstream csv;
  const auto rows = run_bench_suite(parse_h_spec("P2+2P1"), options, &csv);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].n == 100);
  CHECK(rows[0].algo_ns >= 0);
  CHECK(rows[0].oracle_ns >= 0);  // 100 is below the oracle cutoff

  std::istringstream lines(csv.str());
  std::string header, row, extra;
  REQUIRE(std::getline(lines, header));
  CHECK(header == "n,m,algo_ns,oracle_ns");
  REQUIRE(std::getline(lines, row));
  CHECK(std::count(row.begin(), row.end(), ',') == 3);
  CHECK_FALSE(std::getline(lines, extra));
}

TEST_CASE("bench suite skips the oracle above the cutoff") {
  BenchOptions options;
  options.sizes = {50, 200};
  options.repetitions = 2;
  options.oracle_cutoff = 100;
  const auto rows = run_bench_suite(parse_h_spec("P4+P1"), options, nullptr);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].oracle_ns >= 0);
  CHECK(rows[1].oracle_ns == -1);
}

TEST_CASE("bench suite validates its inputs before timing") {
  BenchOptions options;
  options.sizes = {100, 50};
  CHECK_THROWS_AS(run_bench_suite(parse_h_spec("P2+2P1"), options, nullptr),
                  ParseError);
  options.sizes = {};
  CHECK_THROWS_AS(run_bench_suite(parse_h_spec("P2+2P1"), options, nullptr),
                  ParseError);
  options.sizes = {100};
  CHECK_THROWS_AS(run_bench_suite(parse_h_spec("P6"), options, nullptr),
                  UnsupportedClass);
}
