#ifndef HFDIAM_LINEAR_FOREST_HPP
#define HFDIAM_LINEAR_FOREST_HPP

#include <string>
#include <string_view>
#include <vector>

namespace hfdiam {

// A linear forest H = P_{a_1} + ... + P_{a_k}, naming the class of H-free
// graphs. Parts are kept in canonical descending order, every part >= 1.
class LinearForest {
 public:
  // Parts may arrive in any order; zero or negative sizes raise ParseError.
  explicit LinearForest(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int part_count() const { return static_cast<int>(parts_.size()); }
  int total() const { return total_; }

  // Largest diameter of any connected H-free graph: k - 3 + sum(a_i).
  // May be <= 0 for degenerate tiny forests; callers treat values < 1 as
  // "the class has no member realizing a positive shortest-path length".
  int dmax() const { return part_count() - 3 + total_; }

  // Canonical spelling, e.g. "2P2+P1".
  std::string to_string() const;

  bool operator==(const LinearForest& o) const { return parts_ == o.parts_; }

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

// Grammar: term ('+' term)*, term = [multiplier] 'P' size. "2P2+P1" parses
// to parts (2,2,1). Any part order is accepted; zero sizes or multipliers
// raise ParseError.
LinearForest parse_h_spec(std::string_view spec);

}  // namespace hfdiam

#endif
