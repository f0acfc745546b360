#include "hfdiam/graph.hpp"

#include <algorithm>
#include <string>

#include "hfdiam/errors.hpp"

namespace hfdiam {

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 0) throw InvalidEdge("negative vertex count");
  std::vector<std::pair<int, int>> canon;
  canon.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw InvalidEdge("edge endpoint out of range: (" + std::to_string(a) +
                        ", " + std::to_string(b) + ") with n = " +
                        std::to_string(n));
    if (a == b)
      throw InvalidEdge("self-loop at vertex " + std::to_string(a));
    canon.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  Graph g;
  g.n_ = n;
  g.m_ = static_cast<std::int64_t>(canon.size());
  std::vector<int> deg(n, 0);
  for (const auto& [a, b] : canon) {
    ++deg[a];
    ++deg[b];
  }
  g.offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adj_.resize(static_cast<std::size_t>(2) * canon.size());
  std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [a, b] : canon) {
    g.adj_[cursor[a]++] = b;
    g.adj_[cursor[b]++] = a;
  }
  // Sorted insertion order of canon makes every neighbor list of the lower
  // endpoint sorted already; the higher endpoint's list needs the pass.
  for (int v = 0; v < n; ++v) {
    auto* first = g.adj_.data() + g.offsets_[v];
    auto* last = g.adj_.data() + g.offsets_[v + 1];
    if (!std::is_sorted(first, last)) std::sort(first, last);
  }
  return g;
}

Graph Graph::from_csr(std::vector<std::int64_t> offsets,
                      std::vector<int> adj) {
  const int n = static_cast<int>(offsets.size()) - 1;
  if (n < 0 || offsets.front() != 0 ||
      offsets.back() != static_cast<std::int64_t>(adj.size()))
    throw InvalidEdge("malformed CSR offsets");
  if (adj.size() % 2 != 0)
    throw InvalidEdge("neighbor lists have odd total length");
  for (int v = 0; v < n; ++v) {
    if (offsets[v] > offsets[v + 1])
      throw InvalidEdge("malformed CSR offsets");
    int prev = -1;
    for (std::int64_t i = offsets[v]; i < offsets[v + 1]; ++i) {
      const int w = adj[i];
      if (w < 0 || w >= n)
        throw InvalidEdge("neighbor out of range: " + std::to_string(w));
      if (w == v) throw InvalidEdge("self-loop at vertex " + std::to_string(v));
      if (w <= prev)
        throw InvalidEdge("neighbor list not strictly increasing at vertex " +
                          std::to_string(v));
      prev = w;
    }
  }
  Graph g;
  g.n_ = n;
  g.m_ = static_cast<std::int64_t>(adj.size()) / 2;
  g.offsets_ = std::move(offsets);
  g.adj_ = std::move(adj);
  return g;
}

bool Graph::has_edge(int u, int v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int v = 0; v < n_; ++v)
    for (int w : neighbors(v))
      if (v < w) out.emplace_back(v, w);
  return out;
}

}  // namespace hfdiam
