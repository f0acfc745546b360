#include "hfdiam/linear_forest.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "hfdiam/errors.hpp"

namespace hfdiam {

LinearForest::LinearForest(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ParseError("linear forest needs at least one path");
  for (int a : parts_)
    if (a < 1) throw ParseError("path size must be >= 1");
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string LinearForest::to_string() const {
  std::string out;
  std::size_t i = 0;
  while (i < parts_.size()) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (!out.empty()) out += '+';
    const std::size_t count = j - i;
    if (count > 1) out += std::to_string(count);
    out += 'P';
    out += std::to_string(parts_[i]);
    i = j;
  }
  return out;
}

LinearForest parse_h_spec(std::string_view spec) {
  std::vector<int> parts;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < spec.size() && std::isspace(static_cast<unsigned char>(spec[i])))
      ++i;
  };
  auto read_int = [&]() -> long {
    std::size_t start = i;
    long value = 0;
    while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) {
      value = value * 10 + (spec[i] - '0');
      if (value > 1000000) throw ParseError("path size too large in H-spec");
      ++i;
    }
    if (i == start) return -1;
    return value;
  };

  skip_ws();
  if (i == spec.size()) throw ParseError("empty H-spec");
  while (true) {
    skip_ws();
    long multiplier = read_int();
    if (multiplier == -1) multiplier = 1;
    if (multiplier == 0) throw ParseError("zero multiplier in H-spec");
    if (i == spec.size() || (spec[i] != 'P' && spec[i] != 'p'))
      throw ParseError("expected 'P' in H-spec: " + std::string(spec));
    ++i;
    long size = read_int();
    if (size == -1) throw ParseError("missing path size in H-spec");
    if (size == 0) throw ParseError("zero path size in H-spec");
    for (long r = 0; r < multiplier; ++r)
      parts.push_back(static_cast<int>(size));
    if (parts.size() > 64) throw ParseError("too many paths in H-spec");
    skip_ws();
    if (i == spec.size()) break;
    if (spec[i] != '+')
      throw ParseError("unexpected character in H-spec: " + std::string(spec));
    ++i;
  }
  return LinearForest(std::move(parts));
}

}  // namespace hfdiam
