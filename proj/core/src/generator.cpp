#include "hfdiam/generator.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hfdiam/errors.hpp"
#include "hfdiam/graph_algos.hpp"
#include "hfdiam/structure.hpp"

namespace hfdiam {

namespace {

constexpr std::int64_t kEdgeBudget = 50000000;

// Joins components with one edge between consecutive component picks.
Graph patch_connectivity(const Graph& g, std::mt19937_64& rng) {
  const Partition comps = connected_components(g);
  if (comps.class_count() <= 1) return g;
  auto edges = g.edges();
  for (int c = 1; c < comps.class_count(); ++c) {
    const auto& prev = comps.classes[c - 1];
    const auto& cur = comps.classes[c];
    const int a = prev[rng() % prev.size()];
    const int b = cur[rng() % cur.size()];
    edges.emplace_back(a, b);
  }
  return Graph::from_edges(g.vertex_count(), edges);
}

Graph sample_sparse(int n, double avg_degree, std::mt19937_64& rng) {
  const auto pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
  const auto target =
      std::min<std::int64_t>(pairs, static_cast<std::int64_t>(avg_degree * n / 2));
  std::vector<std::pair<int, int>> edges;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (std::int64_t i = 0; i < target; ++i) {
    const int u = pick(rng);
    const int v = pick(rng);
    if (u != v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

// Near-complete sample: all pairs except a sparse random complement with
// the given average co-degree.
Graph sample_dense(int n, double avg_codegree, std::mt19937_64& rng) {
  std::vector<char> removed(static_cast<std::size_t>(n) * n, 0);
  const auto holes = static_cast<std::int64_t>(avg_codegree * n / 2);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (std::int64_t i = 0; i < holes; ++i) {
    const int u = pick(rng);
    const int v = pick(rng);
    if (u == v) continue;
    removed[static_cast<std::size_t>(u) * n + v] = 1;
    removed[static_cast<std::size_t>(v) * n + u] = 1;
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!removed[static_cast<std::size_t>(u) * n + v])
        edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph make_star(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(n, edges);
}

Graph make_complete(int n) {
  if (static_cast<std::int64_t>(n) * (n - 1) / 2 > kEdgeBudget)
    throw TooLarge("complete fallback instance exceeds the edge budget");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

// k-1 cliques of near-equal (seeded) sizes linked in a chain: the largest
// independent set picks one vertex per clique, so the graph is kP1-free.
Graph make_clique_chain(int n, int blocks, std::mt19937_64& rng) {
  blocks = std::min(blocks, n);
  std::vector<int> sizes(blocks, 1);
  std::uniform_int_distribution<int> pick(0, blocks - 1);
  for (int rest = n - blocks; rest > 0; --rest) ++sizes[pick(rng)];

  std::int64_t edge_estimate = blocks;
  for (int s : sizes)
    edge_estimate += static_cast<std::int64_t>(s) * (s - 1) / 2;
  if (edge_estimate > kEdgeBudget)
    throw TooLarge("clique-chain fallback instance exceeds the edge budget");

  std::vector<std::pair<int, int>> edges;
  int base = 0, prev_last = -1;
  for (int s : sizes) {
    for (int a = 0; a < s; ++a)
      for (int b = a + 1; b < s; ++b) edges.emplace_back(base + a, base + b);
    if (prev_last >= 0) edges.emplace_back(prev_last, base);
    prev_last = base + s - 1;
    base += s;
  }
  return Graph::from_edges(n, edges);
}

Graph fallback_instance(const LinearForest& h, int n, std::mt19937_64& rng) {
  const bool all_singletons = h.parts().front() == 1;
  if (all_singletons) {
    const int k = h.part_count();
    if (k == 1)
      throw TooLarge("no nonempty graph is P1-free");
    if (k == 2) return make_complete(n);  // 2P1-free = complete
    return make_clique_chain(n, k - 1, rng);
  }
  if (h.part_count() == 1 && h.parts()[0] == 2) {
    if (n == 1) return Graph::from_edges(1, {});
    throw TooLarge("no connected P2-free graph on 2+ vertices exists");
  }
  if (h.part_count() == 1 && h.parts()[0] == 3)
    return make_complete(n);  // connected P3-free graphs are cliques
  // every other linear forest avoids stars: a star only contains kP1, P2, P3
  return make_star(n);
}

}  // namespace

GenResult generate_hfree(const LinearForest& h, int n, std::uint64_t seed,
                         const GenOptions& options) {
  if (n < 1) throw TooLarge("generator needs n >= 1");
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 0xd1b54a32d192ed03ull);

  GenResult result;
  // Density ladder: the spec's sparse target first, then near-complete
  // densities where the dense classes (small independence number) live.
  std::vector<std::pair<bool, double>> ladder = {{false, 4.0}};
  if (n <= 300) {
    ladder.emplace_back(true, 4.0);
    ladder.emplace_back(true, 2.0);
    ladder.emplace_back(true, 1.0);
    ladder.emplace_back(true, 0.5);
  }

  for (int attempt = 0; attempt < options.attempts; ++attempt) {
    const auto& [dense, parameter] = ladder[attempt % ladder.size()];
    Graph candidate = dense ? sample_dense(n, parameter, rng)
                            : sample_sparse(n, parameter, rng);
    candidate = patch_connectivity(candidate, rng);
    ++result.attempts_used;
    if (!find_induced_linear_forest(candidate, h, options.forest_cap)) {
      result.graph = std::move(candidate);
      return result;
    }
  }

  result.fallback_used = true;
  result.graph = fallback_instance(h, n, rng);
  return result;
}

}  // namespace hfdiam
