#ifndef HFDIAM_BFS_HPP
#define HFDIAM_BFS_HPP

#include <vector>

#include "hfdiam/graph.hpp"

namespace hfdiam {

// One BFS run: hop distances, parents, and the eccentricity of the source.
// dist[v] == -1 marks unreachable vertices; parent[source] == -1.
struct BfsLayers {
  int source = -1;
  std::vector<int> dist;
  std::vector<int> parent;
  int eccentricity = 0;  // max finite distance
  int farthest = -1;     // first vertex dequeued at the eccentricity layer
  int reached = 0;       // number of reachable vertices (incl. source)
};

// O(n + m). Throws InvalidVertex when source is out of range.
BfsLayers bfs(const Graph& g, int source);

// As bfs(), reusing out's buffers to avoid reallocation in n-fold sweeps.
void bfs_into(const Graph& g, int source, BfsLayers& out);

// Path source .. target along BFS parents; empty when target is unreachable.
std::vector<int> path_to(const BfsLayers& layers, int target);

}  // namespace hfdiam

#endif
