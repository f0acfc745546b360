#ifndef HFDIAM_GENERATOR_HPP
#define HFDIAM_GENERATOR_HPP

#include <cstdint>

#include "hfdiam/graph.hpp"
#include "hfdiam/linear_forest.hpp"

namespace hfdiam {

struct GenOptions {
  // Rejection-sampling budget before falling back to a guaranteed H-free
  // construction; 0 goes straight to the fallback.
  int attempts = 200;
  // Cap forwarded to the containment check that vets each sample.
  int forest_cap = 7;
};

struct GenResult {
  Graph graph;
  bool fallback_used = false;
  int attempts_used = 0;
};

// Produces a connected H-free graph on n vertices, seeded and
// deterministic. Random candidates are drawn from an Erdos-Renyi density
// ladder (sparse first, then near-complete densities where H-free graphs
// actually live), patched to connectivity, and kept only if the
// containment search finds no induced H. When the budget runs out the
// fallback emits a star, a complete graph, or a chain of k-1 cliques,
// whichever the class admits. Throws TooLarge when no connected H-free
// graph of this size exists (e.g. H = P2 with n >= 2) or the instance
// would exceed the edge budget.
GenResult generate_hfree(const LinearForest& h, int n, std::uint64_t seed,
                         const GenOptions& options = {});

}  // namespace hfdiam

#endif
