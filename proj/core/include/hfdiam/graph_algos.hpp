#ifndef HFDIAM_GRAPH_ALGOS_HPP
#define HFDIAM_GRAPH_ALGOS_HPP

#include <optional>
#include <span>

#include "hfdiam/graph.hpp"
#include "hfdiam/partition.hpp"

namespace hfdiam {

// True iff one BFS from vertex 0 reaches all n vertices (n == 0 counts as
// connected). O(n + m).
bool is_connected(const Graph& g);

// True iff m == n(n-1)/2. O(1) from the stored edge count.
bool is_clique(const Graph& g);

// Connected components of the subgraph induced by `restrict`, or of the
// whole graph when restrict is not given. Classes are listed in order of
// their smallest vertex. O(n + m).
Partition connected_components(const Graph& g);
Partition connected_components(const Graph& g, std::span<const int> restrict);

}  // namespace hfdiam

#endif
