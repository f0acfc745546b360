#ifndef HFDIAM_HARDNESS_HPP
#define HFDIAM_HARDNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hfdiam/graph.hpp"

namespace hfdiam {

// CNF formula with 1-based signed literals (negative = negated variable).
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  // Throws InvalidFormula on empty clauses or out-of-range literals.
  void validate() const;
};

// Orthogonal-vectors instance: two sets of 0/1 vectors of equal dimension.
struct OvInstance {
  int dim = 0;
  std::vector<std::vector<std::uint8_t>> set_a;
  std::vector<std::vector<std::uint8_t>> set_b;

  // Throws InvalidInstance on empty sets or mismatched vector lengths.
  void validate() const;
};

enum class VertexRole : std::uint8_t {
  S1Assignment,
  S2Assignment,
  Clause,
  T1,
  T2,
  AugmentationPath,
};

const char* role_name(VertexRole role);

// A generated hardness instance: the split (or three-clique) graph, the
// role of each vertex, and the diameter values the construction promises
// for the satisfiable/orthogonal vs. unsatisfiable cases.
struct HardInstance {
  Graph graph;
  std::vector<VertexRole> roles;
  std::uint64_t source_hash = 0;
  int diameter_if_positive = 3;  // satisfiable / orthogonal pair exists
  int diameter_if_negative = 2;
};

// Split-graph reduction from CNF-SAT: one vertex per assignment of each
// variable half (S1, S2 independent), a clique of clause vertices plus t1
// complete to S1 and t2 complete to S2, and an edge from an assignment to
// every clause it fails to satisfy. The diameter is 3 iff the formula is
// satisfiable, else 2. An odd variable count is padded with one unused
// variable. Requires num_vars <= 26 (TooLarge).
HardInstance split_from_cnf(const CnfFormula& f);

// Appends a pendant path of (t-5)/2 edges to every independent-set vertex,
// turning the 2-vs-3 split into (t-3)-vs-(t-2) while staying P_t-free.
// t must be odd and >= 5 (InvalidT); t = 5 returns the instance unchanged.
HardInstance augment_to_pt(const HardInstance& inst, int t);

// Split-graph reduction from Orthogonal Vectors: S1 and S2 carry one
// vertex per vector, the clique side has one vertex per coordinate plus
// t1, t2, and a vector vertex connects to every coordinate where it has a
// 1. Diameter 3 iff an orthogonal pair exists.
HardInstance split_from_ov(const OvInstance& ov);

// split_from_ov plus all edges inside S1 and inside S2: the vertex set
// becomes three cliques, so the graph is 4P1-free, with the same
// diameter-3-iff-orthogonal-pair split.
HardInstance three_clique_from_ov(const OvInstance& ov);

// Exhaustive satisfiability scan over 2^num_vars assignments.
// Requires num_vars <= 26 (TooLarge).
bool brute_sat(const CnfFormula& f);

// True iff some a in A and b in B satisfy a . b == 0.
bool has_orthogonal_pair(const OvInstance& ov);

}  // namespace hfdiam

#endif
