#ifndef HFDIAM_ORACLE_HPP
#define HFDIAM_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hfdiam/graph.hpp"
#include "hfdiam/linear_forest.hpp"

namespace hfdiam {

// Ground truth from the trivial O(nm) algorithm: one BFS per vertex.
struct OracleResult {
  int diameter = 0;
  std::pair<int, int> pair{0, 0};      // a diametral pair attaining it
  std::vector<int> eccentricities;
};

// Exact diameter by n BFS runs. Throws NotConnected on disconnected or
// empty input.
OracleResult brute_diameter(const Graph& g);

// True iff some vertex subset of size h.total() induces exactly h. Raw
// subset enumeration with no pruning; the independent cross-check for
// find_induced_linear_forest. Requires h.total() <= 6 and n <= 12
// (TooLarge otherwise).
bool brute_contains_induced(const Graph& g, const LinearForest& h);

// Streams every labeled connected graph on n vertices exactly once, by
// filtering all 2^C(n,2) edge masks. n <= 8 (TooLarge otherwise).
// Known stream lengths for n = 1..5: 1, 1, 4, 38, 728.
class ConnectedGraphEnumerator {
 public:
  explicit ConnectedGraphEnumerator(int n);

  // Next graph, or nullopt when exhausted.
  std::optional<Graph> next();

  std::uint64_t emitted() const { return emitted_; }

 private:
  bool connected_mask(std::uint64_t mask) const;

  int n_;
  std::uint64_t mask_ = 0;
  std::uint64_t mask_end_;
  std::uint64_t emitted_ = 0;
  std::vector<std::pair<int, int>> pair_of_bit_;
  bool done_ = false;
};

}  // namespace hfdiam

#endif
