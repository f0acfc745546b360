#ifndef HFDIAM_PARTITION_HPP
#define HFDIAM_PARTITION_HPP

#include <vector>

namespace hfdiam {

// Partition of a vertex subset into disjoint nonempty classes.
// class_of[v] == -1 for vertices outside the partitioned base set.
// Class members are kept sorted; class indices are assigned in first-touch
// order by the producing algorithm.
struct Partition {
  std::vector<int> class_of;
  std::vector<std::vector<int>> classes;

  int class_count() const { return static_cast<int>(classes.size()); }
};

// Classes as a sorted set of sorted vertex lists, for order-insensitive
// comparison in tests.
std::vector<std::vector<int>> canonical_classes(const Partition& p);

}  // namespace hfdiam

#endif
