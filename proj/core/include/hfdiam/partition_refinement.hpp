#ifndef HFDIAM_PARTITION_REFINEMENT_HPP
#define HFDIAM_PARTITION_REFINEMENT_HPP

#include <span>
#include <vector>

#include "hfdiam/partition.hpp"

namespace hfdiam {

// Array-based partition refinement. Starts from one class holding the base
// set; each split_by(S) call splits every current class into its S and
// non-S parts in O(|S|) amortized time. Vertices outside the base are
// ignored, so pivot sets can be raw adjacency lists.
//
// Two vertices of the base end up in the same class iff they agree on
// membership in every pivot set, and the resulting set of classes is
// independent of the pivot processing order.
class PartitionRefiner {
 public:
  PartitionRefiner(int universe, std::span<const int> base);

  void split_by(std::span<const int> pivot);
  // Splits by pivot ∪ {extra}: the closed-neighborhood form used for true
  // twin detection.
  void split_by_with(std::span<const int> pivot, int extra);

  int class_of(int v) const { return class_of_[v]; }
  int class_count() const { return static_cast<int>(begin_.size()); }
  int class_size(int c) const { return end_[c] - begin_[c]; }
  // Members of one class, unsorted, without materializing anything.
  std::span<const int> class_members(int c) const {
    return {order_.data() + begin_[c], order_.data() + end_[c]};
  }

  // Snapshot as a Partition: class members sorted, indices in creation order.
  Partition finish() const;

 private:
  void complete_splits();

  std::vector<int> order_, pos_, class_of_;
  std::vector<int> begin_, end_, split_;
  std::vector<int> touched_;
  std::vector<int> buffer_;
};

}  // namespace hfdiam

#endif
