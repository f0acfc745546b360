#include "hfdiam/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

#include "hfdiam/bfs.hpp"
#include "hfdiam/errors.hpp"

namespace hfdiam {

OracleResult brute_diameter(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw NotConnected("empty graph has no diameter");

  OracleResult result;
  result.eccentricities.assign(n, 0);
  BfsLayers layers;
  result.diameter = -1;
  for (int s = 0; s < n; ++s) {
    bfs_into(g, s, layers);
    if (layers.reached != n)
      throw NotConnected("graph is not connected");
    result.eccentricities[s] = layers.eccentricity;
    if (layers.eccentricity > result.diameter) {
      result.diameter = layers.eccentricity;
      result.pair = {s, layers.farthest};
    }
  }
  return result;
}

namespace {

// Is the induced subgraph on `mask` exactly the forest with these part
// sizes? Works on tiny bitmask adjacency (n <= 12).
bool induces_forest(const std::uint32_t* adj, std::uint32_t mask,
                    std::span<const int> sizes_desc, int t) {
  int vs[12];
  int count = 0;
  for (std::uint32_t rest = mask; rest;) {
    const int v = std::countr_zero(rest);
    rest &= rest - 1;
    vs[count++] = v;
  }
  int total_deg = 0;
  for (int i = 0; i < count; ++i) {
    const int d = std::popcount(adj[vs[i]] & mask);
    if (d > 2) return false;
    total_deg += d;
  }
  const int edges = total_deg / 2;

  // component sizes via mask flood fill
  int comp_sizes[12];
  int comps = 0;
  std::uint32_t seen = 0;
  for (int i = 0; i < count; ++i) {
    if (seen >> vs[i] & 1) continue;
    std::uint32_t frontier = 1u << vs[i];
    std::uint32_t comp = 0;
    while (frontier) {
      comp |= frontier;
      std::uint32_t nxt = 0;
      for (std::uint32_t rest = frontier; rest;) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        nxt |= adj[v] & mask;
      }
      frontier = nxt & ~comp;
    }
    seen |= comp;
    comp_sizes[comps++] = std::popcount(comp);
  }
  if (edges != t - comps) return false;  // a cycle somewhere
  if (comps != static_cast<int>(sizes_desc.size())) return false;
  std::sort(comp_sizes, comp_sizes + comps, std::greater<int>());
  for (int i = 0; i < comps; ++i)
    if (comp_sizes[i] != sizes_desc[i]) return false;
  return true;
}

}  // namespace

bool brute_contains_induced(const Graph& g, const LinearForest& h) {
  const int n = g.vertex_count();
  const int t = h.total();
  if (t > 6) throw TooLarge("brute containment capped at forests of size 6");
  if (n > 12) throw TooLarge("brute containment capped at 12 vertices");
  if (t > n) return false;

  std::uint32_t adj[12] = {};
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v)) adj[v] |= 1u << w;

  // Gosper's hack: all n-bit masks with popcount t, ascending.
  const std::uint32_t limit = 1u << n;
  std::uint32_t mask = (1u << t) - 1;
  while (mask < limit) {
    if (induces_forest(adj, mask, h.parts(), t)) return true;
    const std::uint32_t c = mask & -mask;
    const std::uint32_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return false;
}

ConnectedGraphEnumerator::ConnectedGraphEnumerator(int n) : n_(n) {
  if (n < 1 || n > 8)
    throw TooLarge("connected-graph enumeration supports 1 <= n <= 8");
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) pair_of_bit_.emplace_back(u, v);
  mask_end_ = std::uint64_t{1} << pair_of_bit_.size();
}

bool ConnectedGraphEnumerator::connected_mask(std::uint64_t mask) const {
  std::uint32_t adj[8] = {};
  for (std::size_t b = 0; b < pair_of_bit_.size(); ++b) {
    if (mask >> b & 1) {
      const auto [u, v] = pair_of_bit_[b];
      adj[u] |= 1u << v;
      adj[v] |= 1u << u;
    }
  }
  std::uint32_t reach = 1;
  while (true) {
    std::uint32_t nxt = reach;
    for (std::uint32_t rest = reach; rest;) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      nxt |= adj[v];
    }
    if (nxt == reach) break;
    reach = nxt;
  }
  return reach == (1u << n_) - 1;
}

std::optional<Graph> ConnectedGraphEnumerator::next() {
  if (done_) return std::nullopt;
  while (mask_ < mask_end_) {
    const std::uint64_t mask = mask_++;
    if (!connected_mask(mask)) continue;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t b = 0; b < pair_of_bit_.size(); ++b)
      if (mask >> b & 1) edges.push_back(pair_of_bit_[b]);
    ++emitted_;
    return Graph::from_edges(n_, edges);
  }
  done_ = true;
  return std::nullopt;
}

}  // namespace hfdiam
