#ifndef HFDIAM_TESTS_SUPPORT_HPP
#define HFDIAM_TESTS_SUPPORT_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "hfdiam/graph.hpp"

namespace hfdiam::test {

inline Graph make_path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

inline Graph make_cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

inline Graph make_complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

// Star with center 0 and `leaves` leaves.
inline Graph make_star(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

// Random graph patched to connectivity by chaining a random permutation.
inline Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> edges;
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<int> upto(0, n - 1);
  for (int i = 0; i + 1 < n; ++i) {
    std::uniform_int_distribution<int> earlier(0, i);
    edges.emplace_back(perm[earlier(rng)], perm[i + 1]);
  }
  return Graph::from_edges(n, edges);
}

// Single-source distances by edge relaxation, no BFS: the independent
// oracle for the BFS tests. O(n * m).
inline std::vector<int> relaxation_distances(const Graph& g, int source) {
  const int n = g.vertex_count();
  const int inf = n + 1;
  std::vector<int> dist(n, inf);
  dist[source] = 0;
  const auto edges = g.edges();
  for (int round = 0; round < n; ++round) {
    bool changed = false;
    for (const auto& [u, v] : edges) {
      if (dist[u] + 1 < dist[v]) {
        dist[v] = dist[u] + 1;
        changed = true;
      }
      if (dist[v] + 1 < dist[u]) {
        dist[u] = dist[v] + 1;
        changed = true;
      }
    }
    if (!changed) break;
  }
  for (int& d : dist)
    if (d == inf) d = -1;
  return dist;
}

// All-pairs distances by running the relaxation oracle from every source.
inline std::vector<std::vector<int>> relaxation_all_pairs(const Graph& g) {
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.vertex_count(); ++s)
    out.push_back(relaxation_distances(g, s));
  return out;
}

// Quadratic pairwise twin classes: the brute oracle for partition
// refinement. closed = true compares N[u] with N[v].
inline std::vector<std::vector<int>> naive_twin_classes(const Graph& g,
                                                        bool closed) {
  const int n = g.vertex_count();
  auto neighborhood = [&](int v) {
    std::vector<int> nb(g.neighbors(v).begin(), g.neighbors(v).end());
    if (closed) {
      nb.push_back(v);
      std::sort(nb.begin(), nb.end());
    }
    return nb;
  };
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> classes;
  for (int v = 0; v < n; ++v) {
    if (cls[v] != -1) continue;
    const int id = static_cast<int>(classes.size());
    classes.push_back({v});
    cls[v] = id;
    const auto nv = neighborhood(v);
    for (int w = v + 1; w < n; ++w) {
      if (cls[w] == -1 && neighborhood(w) == nv) {
        cls[w] = id;
        classes[id].push_back(w);
      }
    }
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

}  // namespace hfdiam::test

#endif
