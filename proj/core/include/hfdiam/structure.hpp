#ifndef HFDIAM_STRUCTURE_HPP
#define HFDIAM_STRUCTURE_HPP

#include <optional>
#include <span>
#include <vector>

#include "hfdiam/graph.hpp"
#include "hfdiam/linear_forest.hpp"
#include "hfdiam/partition.hpp"

namespace hfdiam {

// Complete r-partite structure of an induced subgraph: r independent parts,
// every cross-part pair adjacent. r == 1 means an independent set.
struct MultipartiteStructure {
  Partition parts;
  int part_count() const { return parts.class_count(); }
};

// Decides whether G[restrict] is complete r-partite for some r >= 1 and
// returns the parts if so. Computes the false-twin classes inside the
// restriction and verifies by degree counting that every vertex sees
// exactly |restrict| - |own class| vertices. O(n + m).
std::optional<MultipartiteStructure> is_complete_multipartite(
    const Graph& g, std::span<const int> restrict);

// Same decision without materializing member lists: part ids per vertex
// (-1 outside the restriction) and part sizes. The allocation-light form
// the linear-time algorithms consume.
struct MultipartiteClasses {
  std::vector<int> class_of;
  std::vector<int> class_size;
  int part_count() const { return static_cast<int>(class_size.size()); }
};
std::optional<MultipartiteClasses> complete_multipartite_classes(
    const Graph& g, std::span<const int> restrict);

// Vertex lists of an induced copy of a linear forest, one list per path in
// canonical part order; paths are induced, chordless, and pairwise
// anticomplete.
using ForestEmbedding = std::vector<std::vector<int>>;

// Searches for an induced copy of h by pruned backtracking over path
// placements. Returns std::nullopt when g is h-free. Worst case
// O(n^{h.total}); practical for total <= 5 on a few hundred vertices.
// Raises ForestTooLarge when h.total exceeds the cap.
std::optional<ForestEmbedding> find_induced_linear_forest(
    const Graph& g, const LinearForest& h, int total_cap = 7);

}  // namespace hfdiam

#endif
