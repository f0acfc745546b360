#include "hfdiam/twins.hpp"

#include <algorithm>
#include <numeric>

#include "hfdiam/partition_refinement.hpp"

namespace hfdiam {

namespace {

PartitionRefiner true_twin_refiner(const Graph& g,
                                   std::span<const int> pivot_order) {
  const int n = g.vertex_count();
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  PartitionRefiner refiner(n, all);
  for (int x : pivot_order) refiner.split_by_with(g.neighbors(x), x);
  return refiner;
}

}  // namespace

namespace detail {

Partition true_twin_classes_with_order(const Graph& g,
                                       std::span<const int> pivot_order) {
  return true_twin_refiner(g, pivot_order).finish();
}

}  // namespace detail

Partition true_twin_classes(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return detail::true_twin_classes_with_order(g, order);
}

Partition false_twin_classes_wrt(const Graph& g, const VertexSet& base) {
  const int n = g.vertex_count();
  PartitionRefiner refiner(n, base.members());
  if (base.size() == n) {
    for (int x = 0; x < n; ++x) refiner.split_by(g.neighbors(x));
  } else {
    for (int x = 0; x < n; ++x)
      if (!base.contains(x)) refiner.split_by(g.neighbors(x));
  }
  return refiner.finish();
}

Partition false_twin_classes_induced(const Graph& g,
                                     std::span<const int> sub) {
  PartitionRefiner refiner(g.vertex_count(), sub);
  for (int x : sub) refiner.split_by(g.neighbors(x));
  return refiner.finish();
}

QuotientMap reduce_true_twins(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  const PartitionRefiner refiner = true_twin_refiner(g, order);

  // flat pass over the refiner: smallest member of each class represents it
  std::vector<int> rep_of_class(refiner.class_count());
  std::vector<int> reps;
  reps.reserve(refiner.class_count());
  for (int c = 0; c < refiner.class_count(); ++c) {
    int rep = refiner.class_members(c).front();
    for (int v : refiner.class_members(c)) rep = std::min(rep, v);
    rep_of_class[c] = rep;
    reps.push_back(rep);
  }
  std::sort(reps.begin(), reps.end());

  QuotientMap qm;
  qm.original = reps;
  std::vector<int> new_id(n, -1);
  for (int r = 0; r < static_cast<int>(reps.size()); ++r)
    new_id[reps[r]] = r;
  qm.kept.resize(n);
  for (int v = 0; v < n; ++v)
    qm.kept[v] = new_id[rep_of_class[refiner.class_of(v)]];

  // reps ascend, so new_id is monotone and the filtered relabeled lists
  // stay sorted; the O(n + m) CSR builder keeps the whole reduction linear
  std::vector<std::int64_t> offsets(reps.size() + 1, 0);
  for (std::size_t r = 0; r < reps.size(); ++r) {
    std::int64_t kept_deg = 0;
    for (int w : g.neighbors(reps[r])) kept_deg += new_id[w] >= 0;
    offsets[r + 1] = offsets[r] + kept_deg;
  }
  std::vector<int> adj(static_cast<std::size_t>(offsets.back()));
  std::int64_t cursor = 0;
  for (int rep : reps)
    for (int w : g.neighbors(rep))
      if (new_id[w] >= 0) adj[cursor++] = new_id[w];
  qm.reduced = Graph::from_csr(std::move(offsets), std::move(adj));
  return qm;
}

}  // namespace hfdiam
