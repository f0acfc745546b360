#ifndef HFDIAM_GRAPH_HPP
#define HFDIAM_GRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hfdiam {

// Immutable undirected graph in compressed adjacency (CSR) form.
//
// Invariants: no self-loops, no duplicate edges, neighbor lists strictly
// increasing, adjacency symmetric. Construction canonicalizes arbitrary
// edge input (duplicates collapsed, self-loops rejected). Safe to share
// read-only across threads.
class Graph {
 public:
  Graph() = default;

  // Builds a canonical graph from an edge list. Endpoints must lie in
  // [0, n); self-loops raise InvalidEdge. Duplicate pairs (in either
  // orientation) are collapsed.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  // O(n + m) build from ready-made CSR buffers: offsets has n+1 entries
  // and adj holds each vertex's neighbors strictly increasing (validated
  // here, InvalidEdge otherwise). Symmetry is the caller's contract; used
  // by linear-time transformations that preserve it, such as twin
  // contraction.
  static Graph from_csr(std::vector<std::int64_t> offsets,
                        std::vector<int> adj);

  int vertex_count() const { return n_; }
  std::int64_t edge_count() const { return m_; }

  std::span<const int> neighbors(int v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int degree(int v) const {
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }

  // O(log deg) membership probe. Algorithm inner loops use marker arrays
  // instead; this is for tests and one-off checks.
  bool has_edge(int u, int v) const;

  // Re-emits the canonical edge list (u < v, lexicographic).
  std::vector<std::pair<int, int>> edges() const;

 private:
  int n_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::int64_t> offsets_ = {0};
  std::vector<int> adj_;
};

}  // namespace hfdiam

#endif
