#include "hfdiam/bfs.hpp"

#include <algorithm>
#include <string>

#include "hfdiam/errors.hpp"

namespace hfdiam {

void bfs_into(const Graph& g, int source, BfsLayers& out) {
  const int n = g.vertex_count();
  if (source < 0 || source >= n)
    throw InvalidVertex("BFS source out of range: " + std::to_string(source));

  out.source = source;
  out.dist.assign(n, -1);
  out.parent.assign(n, -1);
  out.eccentricity = 0;
  out.farthest = source;
  out.reached = 0;

  std::vector<int> queue;
  queue.reserve(n);
  queue.push_back(source);
  out.dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    const int dv = out.dist[v];
    for (int w : g.neighbors(v)) {
      if (out.dist[w] < 0) {
        out.dist[w] = dv + 1;
        out.parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  out.reached = static_cast<int>(queue.size());
  const int far = queue.back();
  out.eccentricity = out.dist[far];
  // first dequeued vertex of the last layer, for deterministic witnesses
  auto it = std::find_if(queue.begin(), queue.end(), [&](int v) {
    return out.dist[v] == out.eccentricity;
  });
  out.farthest = *it;
}

BfsLayers bfs(const Graph& g, int source) {
  BfsLayers out;
  bfs_into(g, source, out);
  return out;
}

std::vector<int> path_to(const BfsLayers& layers, int target) {
  std::vector<int> path;
  if (target < 0 || target >= static_cast<int>(layers.dist.size()) ||
      layers.dist[target] < 0)
    return path;
  for (int v = target; v != -1; v = layers.parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace hfdiam
