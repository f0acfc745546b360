#ifndef HFDIAM_SRC_DIAM_INTERNAL_HPP
#define HFDIAM_SRC_DIAM_INTERNAL_HPP

#include <optional>
#include <string>

#include "hfdiam/bfs.hpp"
#include "hfdiam/diameter.hpp"
#include "hfdiam/graph.hpp"

namespace hfdiam::detail {

// Throws NotConnected on empty or disconnected input.
void require_connected(const Graph& g);

// Witness for the source..farthest shortest path of a finished BFS.
Witness witness_to(const BfsLayers& layers, int target);
inline Witness witness_to_farthest(const BfsLayers& layers) {
  return witness_to(layers, layers.farthest);
}

// ExactDiameter outcome for a clique: a single vertex (diameter 0) or an
// arbitrary edge (diameter 1).
DiameterOutcome clique_outcome(const Graph& g);

// Finds a nonadjacent pair with a common neighbor, probing the smallest
// vertex of non-full degree against its smallest non-neighbor. Empty when
// the graph is complete or that pair sits at distance > 2.
std::optional<Witness> len2_witness(const Graph& g);

// Outcome for a BFS eccentricity beyond the class's d_max: impossible for
// members, so the precondition was violated. Reports through the
// diagnostic hook; NotInClass in verified mode, DmaxNo in trusting mode.
DiameterOutcome beyond_dmax(const char* algo, int ecc, int dmax,
                            TrustMode mode);

// Smallest-id vertex of minimum degree.
int min_degree_vertex(const Graph& g);

}  // namespace hfdiam::detail

#endif
