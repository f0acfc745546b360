#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <sstream>

#include "doctest.h"
#include "hfdiam/diameter.hpp"
#include "hfdiam/errors.hpp"
#include "hfdiam/graph_algos.hpp"
#include "hfdiam/hardness.hpp"
#include "hfdiam/io.hpp"
#include "hfdiam/oracle.hpp"
#include "hfdiam/structure.hpp"
#include "support.hpp"

using namespace hfdiam;
using namespace hfdiam::test;

namespace {

// Independent DPLL-style satisfiability check: unit propagation plus
// splitting. Cross-validates the exhaustive scan.
bool dpll(std::vector<std::vector<int>> clauses, std::vector<int>& assign) {
  for (;;) {
    bool changed = false;
    for (const auto& clause : clauses) {
      int unassigned = 0, last = 0;
      bool satisfied = false;
      for (int lit : clause) {
        const int value = assign[std::abs(lit)];
        if (value == 0) {
          ++unassigned;
          last = lit;
        } else if ((value > 0) == (lit > 0)) {
          satisfied = true;
          break;
        }
      }
      if (satisfied) continue;
      if (unassigned == 0) return false;
      if (unassigned == 1) {
        assign[std::abs(last)] = last > 0 ? 1 : -1;
        changed = true;
      }
    }
    if (!changed) break;
  }
  int var = 0;
  for (std::size_t v = 1; v < assign.size(); ++v)
    if (assign[v] == 0) {
      var = static_cast<int>(v);
      break;
    }
  if (var == 0) {
    for (const auto& clause : clauses) {
      bool satisfied = false;
      for (int lit : clause)
        if ((assign[std::abs(lit)] > 0) == (lit > 0)) satisfied = true;
      if (!satisfied) return false;
    }
    return true;
  }
  for (int value : {1, -1}) {
    auto saved = assign;
    assign[var] = value;
    if (dpll(clauses, assign)) return true;
    assign = saved;
  }
  return false;
}

bool dpll_sat(const CnfFormula& f) {
  std::vector<int> assign(f.num_vars + 1, 0);
  return dpll(f.clauses, assign);
}

CnfFormula random_cnf(int vars, int max_clauses, std::mt19937_64& rng) {
  CnfFormula f;
  f.num_vars = vars;
  std::uniform_int_distribution<int> var(1, vars);
  std::uniform_int_distribution<int> nclauses(1, max_clauses);
  const int m = nclauses(rng);
  for (int c = 0; c < m; ++c) {
    std::vector<int> clause;
    const int width = 1 + static_cast<int>(rng() % 3);
    for (int l = 0; l < width; ++l) {
      const int v = var(rng);
      clause.push_back(rng() % 2 ? v : -v);
    }
    f.clauses.push_back(clause);
  }
  return f;
}

OvInstance random_ov(int dim, int na, int nb, std::mt19937_64& rng) {
  OvInstance ov;
  ov.dim = dim;
  auto vec = [&] {
    std::vector<std::uint8_t> v(dim);
    for (auto& bit : v) bit = rng() % 2;
    return v;
  };
  for (int i = 0; i < na; ++i) ov.set_a.push_back(vec());
  for (int i = 0; i < nb; ++i) ov.set_b.push_back(vec());
  return ov;
}

// The split property: assignment-side vertices form an independent set,
// clause-side vertices a clique.
void check_split_structure(const HardInstance& inst) {
  const Graph& g = inst.graph;
  std::vector<int> clique_side, independent_side;
  for (int v = 0; v < g.vertex_count(); ++v) {
    switch (inst.roles[v]) {
      case VertexRole::Clause:
      case VertexRole::T1:
      case VertexRole::T2:
        clique_side.push_back(v);
        break;
      case VertexRole::S1Assignment:
      case VertexRole::S2Assignment:
        independent_side.push_back(v);
        break;
      case VertexRole::AugmentationPath:
        break;
    }
  }
  for (std::size_t a = 0; a < clique_side.size(); ++a)
    for (std::size_t b = a + 1; b < clique_side.size(); ++b)
      CHECK(g.has_edge(clique_side[a], clique_side[b]));
  for (std::size_t a = 0; a < independent_side.size(); ++a)
    for (std::size_t b = a + 1; b < independent_side.size(); ++b)
      CHECK_FALSE(g.has_edge(independent_side[a], independent_side[b]));
}

}  // namespace

TEST_CASE("split_from_cnf fixed examples") {
  // (x1 v x2): satisfiable, 2 vars -> 2+2+3 = 7 vertices, diameter 3
  CnfFormula sat;
  sat.num_vars = 2;
  sat.clauses = {{1, 2}};
  const HardInstance pos = split_from_cnf(sat);
  CHECK(pos.graph.vertex_count() == 7);
  CHECK(is_connected(pos.graph));
  CHECK(brute_sat(sat));
  CHECK(brute_diameter(pos.graph).diameter == 3);
  check_split_structure(pos);

  // (x1) and (not x1): unsatisfiable, diameter 2
  CnfFormula unsat;
  unsat.num_vars = 2;
  unsat.clauses = {{1}, {-1}};
  const HardInstance neg = split_from_cnf(unsat);
  CHECK_FALSE(brute_sat(unsat));
  CHECK(brute_diameter(neg.graph).diameter == 2);
  check_split_structure(neg);

  CnfFormula empty_clause;
  empty_clause.num_vars = 2;
  empty_clause.clauses = {{1}, {}};
  CHECK_THROWS_AS(split_from_cnf(empty_clause), InvalidFormula);

  CnfFormula huge;
  huge.num_vars = 27;
  CHECK_THROWS_AS(split_from_cnf(huge), TooLarge);
}

TEST_CASE("split_from_cnf equivalence on random formulas") {
  std::mt19937_64 rng(71);
  for (int round = 0; round < 40; ++round) {
    const int vars = 4 + 2 * static_cast<int>(rng() % 3);  // 4, 6, 8
    const CnfFormula f = random_cnf(vars, 40, rng);
    const bool sat = brute_sat(f);
    CHECK(sat == dpll_sat(f));  // independent solver agrees
    const HardInstance inst = split_from_cnf(f);
    const int diameter = brute_diameter(inst.graph).diameter;
    CHECK((diameter == 2 || diameter == 3));
    CHECK((diameter == 3) == sat);
    CHECK(diameter == (sat ? inst.diameter_if_positive
                           : inst.diameter_if_negative));
    check_split_structure(inst);
  }
}

TEST_CASE("odd variable counts are padded and preserved") {
  std::mt19937_64 rng(73);
  for (int round = 0; round < 15; ++round) {
    const CnfFormula f = random_cnf(5, 20, rng);
    const HardInstance inst = split_from_cnf(f);
    // padded to 6 variables: sides of 2^3 each
    CHECK(inst.graph.vertex_count() ==
          8 + 8 + 2 + static_cast<int>(f.clauses.size()));
    CHECK((brute_diameter(inst.graph).diameter == 3) == brute_sat(f));
  }
}

TEST_CASE("augment_to_pt grows the diameter split and stays Pt-free") {
  CnfFormula sat;
  sat.num_vars = 2;
  sat.clauses = {{1, 2}};
  const HardInstance base = split_from_cnf(sat);

  // t = 5 is the identity
  const HardInstance same = augment_to_pt(base, 5);
  CHECK(same.graph.vertex_count() == base.graph.vertex_count());
  CHECK(same.graph.edge_count() == base.graph.edge_count());

  const HardInstance aug = augment_to_pt(base, 7);
  CHECK(brute_diameter(aug.graph).diameter == 5);
  CHECK(aug.diameter_if_positive == 5);
  CHECK_FALSE(find_induced_linear_forest(aug.graph, parse_h_spec("P7")));

  CnfFormula unsat;
  unsat.num_vars = 2;
  unsat.clauses = {{1}, {-1}};
  const HardInstance aug2 = augment_to_pt(split_from_cnf(unsat), 7);
  CHECK(brute_diameter(aug2.graph).diameter == 4);
  CHECK_FALSE(find_induced_linear_forest(aug2.graph, parse_h_spec("P7")));

  CHECK_THROWS_AS(augment_to_pt(base, 6), InvalidT);
  CHECK_THROWS_AS(augment_to_pt(base, 3), InvalidT);
  CHECK_THROWS_AS(augment_to_pt(aug, 7), InvalidInstance);
}

TEST_CASE("split_from_ov fixed examples") {
  OvInstance pos;
  pos.dim = 2;
  pos.set_a = {{1, 0}};
  pos.set_b = {{0, 1}};
  CHECK(has_orthogonal_pair(pos));
  CHECK(brute_diameter(split_from_ov(pos).graph).diameter == 3);
  check_split_structure(split_from_ov(pos));

  OvInstance neg;
  neg.dim = 2;
  neg.set_a = {{1, 1}};
  neg.set_b = {{1, 0}, {0, 1}};
  CHECK_FALSE(has_orthogonal_pair(neg));
  CHECK(brute_diameter(split_from_ov(neg).graph).diameter == 2);

  OvInstance bad;
  bad.dim = 2;
  bad.set_a = {{1, 0}};
  CHECK_THROWS_AS(split_from_ov(bad), InvalidInstance);
}

TEST_CASE("three_clique_from_ov is 4P1-free with the same split") {
  std::mt19937_64 rng(79);
  for (int round = 0; round < 25; ++round) {
    const OvInstance ov = random_ov(2 + static_cast<int>(rng() % 5),
                                    1 + static_cast<int>(rng() % 4),
                                    1 + static_cast<int>(rng() % 4), rng);
    const HardInstance inst = three_clique_from_ov(ov);
    const int diameter = brute_diameter(inst.graph).diameter;
    CHECK((diameter == 3) == has_orthogonal_pair(ov));
    if (inst.graph.vertex_count() <= 12)
      CHECK_FALSE(brute_contains_induced(inst.graph, parse_h_spec("4P1")));
    else
      CHECK_FALSE(find_induced_linear_forest(inst.graph, parse_h_spec("4P1")));

    // role tags partition the vertex set into exactly three cliques
    std::vector<std::vector<int>> sides(3);
    for (int v = 0; v < inst.graph.vertex_count(); ++v) {
      switch (inst.roles[v]) {
        case VertexRole::S1Assignment: sides[0].push_back(v); break;
        case VertexRole::S2Assignment: sides[1].push_back(v); break;
        default: sides[2].push_back(v); break;
      }
    }
    for (const auto& side : sides)
      for (std::size_t a = 0; a < side.size(); ++a)
        for (std::size_t b = a + 1; b < side.size(); ++b)
          CHECK(inst.graph.has_edge(side[a], side[b]));
  }
}

TEST_CASE("the dmax_4p1 decider answers the three-clique instances") {
  std::mt19937_64 rng(83);
  for (int round = 0; round < 20; ++round) {
    const OvInstance ov = random_ov(3 + static_cast<int>(rng() % 4),
                                    2 + static_cast<int>(rng() % 3),
                                    2 + static_cast<int>(rng() % 3), rng);
    const HardInstance inst = three_clique_from_ov(ov);
    // diameter is 2 or 3, never d_max = 5
    CHECK(dmax_4p1(inst.graph).kind == OutcomeKind::DmaxNo);
  }
}

TEST_CASE("brute_sat fixed examples") {
  CnfFormula f;
  f.num_vars = 2;
  f.clauses = {{1, 2}};
  CHECK(brute_sat(f));
  f.clauses = {{1}, {-1}};
  CHECK_FALSE(brute_sat(f));
  f.clauses = {};
  CHECK(brute_sat(f));

  CnfFormula big;
  big.num_vars = 27;
  CHECK_THROWS_AS(brute_sat(big), TooLarge);
}

TEST_CASE("DIMACS and OV parsing round out the formats") {
  std::istringstream cnf(
      "c comment\np cnf 3 2\n1 -2 0\n2 3 0\n");
  const CnfFormula f = parse_dimacs_cnf(cnf);
  CHECK(f.num_vars == 3);
  CHECK(f.clauses == std::vector<std::vector<int>>{{1, -2}, {2, 3}});

  std::istringstream bad_count("p cnf 2 3\n1 0\n");
  CHECK_THROWS_AS(parse_dimacs_cnf(bad_count), ParseError);
  std::istringstream no_header("1 2 0\n");
  CHECK_THROWS_AS(parse_dimacs_cnf(no_header), ParseError);
  std::istringstream unterminated("p cnf 2 1\n1 2\n");
  CHECK_THROWS_AS(parse_dimacs_cnf(unterminated), ParseError);

  std::istringstream ov_text("10\n01\n\n11\n");
  const OvInstance ov = parse_ov(ov_text);
  CHECK(ov.dim == 2);
  CHECK(ov.set_a.size() == 2);
  CHECK(ov.set_b.size() == 1);

  std::istringstream ov_bad("10\n015\n\n11\n");
  CHECK_THROWS_AS(parse_ov(ov_bad), ParseError);
  std::istringstream ov_one_block("10\n01\n");
  CHECK_THROWS_AS(parse_ov(ov_one_block), ParseError);
}

TEST_CASE("hard instance files parse back as graphs with role comments") {
  CnfFormula f;
  f.num_vars = 2;
  f.clauses = {{1, 2}};
  const HardInstance inst = split_from_cnf(f);
  std::ostringstream out;
  write_hard_instance(out, inst);
  std::istringstream in(out.str());
  const Graph g = parse_edge_list(in);
  CHECK(g.vertex_count() == inst.graph.vertex_count());
  CHECK(g.edges() == inst.graph.edges());
}
