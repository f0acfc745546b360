#include "hfdiam/graph_algos.hpp"

#include <algorithm>
#include <numeric>

#include "hfdiam/bfs.hpp"

namespace hfdiam {

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  return bfs(g, 0).reached == n;
}

bool is_clique(const Graph& g) {
  const std::int64_t n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

std::vector<std::vector<int>> canonical_classes(const Partition& p) {
  std::vector<std::vector<int>> out = p.classes;
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Partition components_impl(const Graph& g, std::span<const int> base,
                          bool restricted) {
  const int n = g.vertex_count();
  Partition p;
  p.class_of.assign(n, -1);

  std::vector<char> in_base;
  if (restricted) {
    in_base.assign(n, 0);
    for (int v : base) in_base[v] = 1;
  }
  auto member = [&](int v) { return !restricted || in_base[v]; };

  std::vector<int> order(base.begin(), base.end());
  if (!restricted) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
  } else {
    std::sort(order.begin(), order.end());
  }

  std::vector<int> stack;
  for (int s : order) {
    if (p.class_of[s] != -1) continue;
    const int cid = p.class_count();
    p.classes.emplace_back();
    p.class_of[s] = cid;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      p.classes[cid].push_back(v);
      for (int w : g.neighbors(v)) {
        if (member(w) && p.class_of[w] == -1) {
          p.class_of[w] = cid;
          stack.push_back(w);
        }
      }
    }
    std::sort(p.classes[cid].begin(), p.classes[cid].end());
  }
  return p;
}

}  // namespace

Partition connected_components(const Graph& g) {
  return components_impl(g, {}, false);
}

Partition connected_components(const Graph& g, std::span<const int> restrict) {
  return components_impl(g, restrict, true);
}

}  // namespace hfdiam
