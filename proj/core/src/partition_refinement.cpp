#include "hfdiam/partition_refinement.hpp"

#include <algorithm>

namespace hfdiam {

PartitionRefiner::PartitionRefiner(int universe, std::span<const int> base)
    : pos_(universe, -1), class_of_(universe, -1) {
  order_.assign(base.begin(), base.end());
  std::sort(order_.begin(), order_.end());
  order_.erase(std::unique(order_.begin(), order_.end()), order_.end());
  for (int i = 0; i < static_cast<int>(order_.size()); ++i) {
    pos_[order_[i]] = i;
    class_of_[order_[i]] = 0;
  }
  if (!order_.empty()) {
    begin_.push_back(0);
    end_.push_back(static_cast<int>(order_.size()));
    split_.push_back(0);
  }
}

void PartitionRefiner::split_by(std::span<const int> pivot) {
  for (int v : pivot) {
    const int c = class_of_[v];
    if (c < 0) continue;
    if (split_[c] == begin_[c]) touched_.push_back(c);
    // move v into the marked prefix of its class
    const int i = pos_[v];
    const int j = split_[c]++;
    const int w = order_[j];
    std::swap(order_[i], order_[j]);
    pos_[v] = j;
    pos_[w] = i;
  }
  complete_splits();
}

void PartitionRefiner::split_by_with(std::span<const int> pivot, int extra) {
  buffer_.assign(pivot.begin(), pivot.end());
  buffer_.push_back(extra);
  split_by(buffer_);
}

void PartitionRefiner::complete_splits() {
  for (int c : touched_) {
    const int s = split_[c];
    if (s == end_[c]) {  // whole class marked, nothing to split
      split_[c] = begin_[c];
      continue;
    }
    // The marked prefix [begin, s) becomes a new class; updating class_of_
    // for it costs O(marked), keeping each split_by(S) within O(|S|).
    const int nc = class_count();
    begin_.push_back(begin_[c]);
    end_.push_back(s);
    split_.push_back(begin_[c]);
    for (int i = begin_[c]; i < s; ++i) class_of_[order_[i]] = nc;
    begin_[c] = s;
    split_[c] = s;
  }
  touched_.clear();
}

Partition PartitionRefiner::finish() const {
  Partition p;
  p.class_of.assign(class_of_.begin(), class_of_.end());
  p.classes.resize(class_count());
  for (int c = 0; c < class_count(); ++c) {
    auto& members = p.classes[c];
    members.assign(order_.begin() + begin_[c], order_.begin() + end_[c]);
    std::sort(members.begin(), members.end());
  }
  return p;
}

}  // namespace hfdiam
