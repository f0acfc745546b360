#include "hfdiam/structure.hpp"

#include <algorithm>
#include <string>

#include "hfdiam/errors.hpp"
#include "hfdiam/partition_refinement.hpp"

namespace hfdiam {

namespace {

PartitionRefiner induced_false_twin_refiner(const Graph& g,
                                            std::span<const int> sub) {
  PartitionRefiner refiner(g.vertex_count(), sub);
  for (int x : sub) refiner.split_by(g.neighbors(x));
  return refiner;
}

// False-twin classes are independent sets by construction, so the graph is
// complete multipartite iff every vertex is adjacent to everything outside
// its own class, which degree counting certifies.
bool degrees_certify_multipartite(const Graph& g,
                                  std::span<const int> restrict,
                                  const PartitionRefiner& refiner) {
  const int total = static_cast<int>(restrict.size());
  std::vector<char> in_restrict(g.vertex_count(), 0);
  for (int v : restrict) in_restrict[v] = 1;
  for (int v : restrict) {
    int deg_inside = 0;
    for (int w : g.neighbors(v)) deg_inside += in_restrict[w];
    if (deg_inside != total - refiner.class_size(refiner.class_of(v)))
      return false;
  }
  return true;
}

}  // namespace

std::optional<MultipartiteStructure> is_complete_multipartite(
    const Graph& g, std::span<const int> restrict) {
  if (restrict.empty()) return std::nullopt;
  const PartitionRefiner refiner = induced_false_twin_refiner(g, restrict);
  if (!degrees_certify_multipartite(g, restrict, refiner)) return std::nullopt;
  return MultipartiteStructure{refiner.finish()};
}

std::optional<MultipartiteClasses> complete_multipartite_classes(
    const Graph& g, std::span<const int> restrict) {
  if (restrict.empty()) return std::nullopt;
  const PartitionRefiner refiner = induced_false_twin_refiner(g, restrict);
  if (!degrees_certify_multipartite(g, restrict, refiner)) return std::nullopt;
  MultipartiteClasses out;
  out.class_of.assign(g.vertex_count(), -1);
  for (int v : restrict) out.class_of[v] = refiner.class_of(v);
  out.class_size.resize(refiner.class_count());
  for (int c = 0; c < refiner.class_count(); ++c)
    out.class_size[c] = refiner.class_size(c);
  return out;
}

namespace {

// Backtracking over path placements: parts are filled in canonical
// descending order, each new vertex must extend the current path and be
// non-adjacent to every other vertex already placed.
class ForestSearcher {
 public:
  ForestSearcher(const Graph& g, const std::vector<int>& sizes)
      : g_(g), sizes_(sizes), chosen_(g.vertex_count(), 0) {
    paths_.resize(sizes.size());
  }

  bool search() { return place_part(0); }

  ForestEmbedding embedding() const { return paths_; }

 private:
  bool place_part(std::size_t p) {
    if (p == sizes_.size()) return true;
    // identical-size parts are forced into ascending start order, so each
    // multiset of paths is generated once
    int min_start = 0;
    if (p > 0 && sizes_[p] == sizes_[p - 1]) min_start = paths_[p - 1][0] + 1;
    for (int v = min_start; v < g_.vertex_count(); ++v) {
      if (!valid_start(v)) continue;
      push(p, v);
      if (extend(p, 1)) return true;
      pop(p);
    }
    return false;
  }

  bool extend(std::size_t p, int k) {
    if (k == sizes_[p]) {
      // enumerate each path in one orientation only
      if (sizes_[p] > 1 && paths_[p].front() > paths_[p].back()) return false;
      return place_part(p + 1);
    }
    const int prev = paths_[p].back();
    for (int v : g_.neighbors(prev)) {
      if (!valid_extension(v, prev)) continue;
      push(p, v);
      if (extend(p, k + 1)) return true;
      pop(p);
    }
    return false;
  }

  bool valid_start(int v) const {
    if (chosen_[v]) return false;
    for (int w : g_.neighbors(v))
      if (chosen_[w]) return false;
    return true;
  }

  bool valid_extension(int v, int prev) const {
    if (chosen_[v]) return false;
    for (int w : g_.neighbors(v))
      if (chosen_[w] && w != prev) return false;
    return true;
  }

  void push(std::size_t p, int v) {
    paths_[p].push_back(v);
    chosen_[v] = 1;
  }
  void pop(std::size_t p) {
    chosen_[paths_[p].back()] = 0;
    paths_[p].pop_back();
  }

  const Graph& g_;
  const std::vector<int>& sizes_;
  std::vector<char> chosen_;
  ForestEmbedding paths_;
};

}  // namespace

std::optional<ForestEmbedding> find_induced_linear_forest(
    const Graph& g, const LinearForest& h, int total_cap) {
  if (h.total() > total_cap)
    throw ForestTooLarge("forest on " + std::to_string(h.total()) +
                         " vertices exceeds the search cap of " +
                         std::to_string(total_cap));
  if (h.total() > g.vertex_count()) return std::nullopt;
  ForestSearcher searcher(g, h.parts());
  if (!searcher.search()) return std::nullopt;
  return searcher.embedding();
}

}  // namespace hfdiam
