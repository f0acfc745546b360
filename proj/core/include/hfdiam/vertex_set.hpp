#ifndef HFDIAM_VERTEX_SET_HPP
#define HFDIAM_VERTEX_SET_HPP

#include <cstdint>
#include <vector>

namespace hfdiam {

// Subset of [0, n) with O(1) membership through a timestamped marker array.
// clear() bumps the epoch instead of touching the markers, so repeated reuse
// inside a linear-time phase stays O(members added). Single-owner scratch
// state; not shared across threads.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : stamp_(universe, 0) {}

  int universe() const { return static_cast<int>(stamp_.size()); }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }

  bool contains(int v) const { return stamp_[v] == epoch_; }

  // Inserts v if absent; duplicates are ignored.
  void add(int v) {
    if (stamp_[v] != epoch_) {
      stamp_[v] = epoch_;
      members_.push_back(v);
    }
  }

  void clear() {
    members_.clear();
    if (++epoch_ == 0) {  // epoch wraparound: wipe and restart
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
  }

  // Members in insertion order.
  const std::vector<int>& members() const { return members_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::vector<int> members_;
  std::uint32_t epoch_ = 1;
};

}  // namespace hfdiam

#endif
