#ifndef HFDIAM_BENCH_HARNESS_HPP
#define HFDIAM_BENCH_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hfdiam/linear_forest.hpp"

namespace hfdiam {

struct BenchOptions {
  std::vector<long long> sizes;  // ascending vertex counts
  std::uint64_t seed = 0;
  int repetitions = 5;               // timed runs per size (plus a warm-up)
  long long oracle_cutoff = 20000;   // brute oracle skipped above this n
};

struct BenchRow {
  long long n = 0;
  long long m = 0;
  std::int64_t algo_ns = -1;
  std::int64_t oracle_ns = -1;  // -1 when skipped
};

// Size sweep for one class: per size, generate an instance, time the class
// algorithm and (below the cutoff) the brute-force oracle, medians over the
// configured repetitions with one discarded warm-up run, monotonic clock.
// Writes CSV rows "n,m,algo_ns,oracle_ns" to csv when given. Instances come
// from the generator's guaranteed construction so the sweep scales to
// millions of vertices. Throws UnsupportedClass before any timing when the
// class has no algorithm, and ParseError when sizes are not ascending.
std::vector<BenchRow> run_bench_suite(const LinearForest& h,
                                      const BenchOptions& options,
                                      std::ostream* csv);

}  // namespace hfdiam

#endif
