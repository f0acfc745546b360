#ifndef HFDIAM_TWINS_HPP
#define HFDIAM_TWINS_HPP

#include <span>
#include <vector>

#include "hfdiam/graph.hpp"
#include "hfdiam/partition.hpp"
#include "hfdiam/vertex_set.hpp"

namespace hfdiam {

// Result of contracting every true-twin class to its smallest member.
// kept[v] is the reduced-graph id of v's representative; original[r] is the
// input-graph id of reduced vertex r, so kept[original[r]] == r.
struct QuotientMap {
  Graph reduced;
  std::vector<int> kept;
  std::vector<int> original;
};

// Partition of V into classes of true twins (N[u] == N[v]). O(n + m) by
// partition refinement with closed-neighborhood pivots.
Partition true_twin_classes(const Graph& g);

// Partition of `base` by agreement of neighborhoods outside the base:
// u, v share a class iff N(u) ∩ (V ∖ base) == N(v) ∩ (V ∖ base). When base
// is all of V there is no outside, and the partition is instead by ordinary
// false twins, N(u) == N(v). O(n + m).
Partition false_twin_classes_wrt(const Graph& g, const VertexSet& base);

// Partition of `sub` into false-twin classes of the induced subgraph G[sub]:
// u, v share a class iff N(u) ∩ sub == N(v) ∩ sub. O(n + m).
Partition false_twin_classes_induced(const Graph& g, std::span<const int> sub);

// Removes all-but-one vertex of each true-twin class. Pairwise distances
// among kept vertices are unchanged, the diameter is unchanged unless g is
// a clique, and every H-freeness of g carries over. O(n + m).
QuotientMap reduce_true_twins(const Graph& g);

namespace detail {
// Refinement with an explicit pivot order; the public functions use
// ascending vertex order. Exposed so tests can exercise order-insensitivity.
Partition true_twin_classes_with_order(const Graph& g,
                                       std::span<const int> pivot_order);
}  // namespace detail

}  // namespace hfdiam

#endif
