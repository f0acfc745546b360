#include "hfdiam/bench_harness.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include "hfdiam/diameter.hpp"
#include "hfdiam/errors.hpp"
#include "hfdiam/generator.hpp"
#include "hfdiam/oracle.hpp"

namespace hfdiam {

namespace {

using clock_type = std::chrono::steady_clock;

template <typename Fn>
std::int64_t time_once(Fn&& fn) {
  const auto start = clock_type::now();
  fn();
  const auto stop = clock_type::now();
  return std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start)
      .count();
}

std::int64_t median(std::vector<std::int64_t>& samples) {
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

}  // namespace

std::vector<BenchRow> run_bench_suite(const LinearForest& h,
                                      const BenchOptions& options,
                                      std::ostream* csv) {
  if (!class_supported(h))
    throw UnsupportedClass("no algorithm to benchmark for " + h.to_string());
  if (options.sizes.empty()) throw ParseError("bench needs at least one size");
  if (!std::is_sorted(options.sizes.begin(), options.sizes.end()))
    throw ParseError("bench sizes must be ascending");
  if (options.repetitions < 1) throw ParseError("bench needs repetitions >= 1");

  // Guaranteed construction: rejection sampling cannot keep up at sweep
  // scale, and the fallback is H-free by construction.
  GenOptions gen_options;
  gen_options.attempts = 0;
  std::vector<Graph> instances;
  instances.reserve(options.sizes.size());
  for (long long size : options.sizes)
    instances.push_back(
        generate_hfree(h, static_cast<int>(size), options.seed, gen_options)
            .graph);

  const std::size_t count = instances.size();
  std::vector<std::vector<std::int64_t>> algo_samples(count),
      oracle_samples(count);

  // Repetitions are interleaved across sizes so ambient drift (thermal,
  // scheduling) spreads evenly instead of biasing the growth ratios; the
  // first pass is the discarded warm-up.
  for (int rep = 0; rep <= options.repetitions; ++rep) {
    for (std::size_t i = 0; i < count; ++i) {
      const Graph& g = instances[i];
      const std::int64_t ns = time_once([&] {
        volatile auto kind = dispatch(h, g).kind;
        (void)kind;
      });
      if (rep > 0) algo_samples[i].push_back(ns);
    }
  }
  for (int rep = 0; rep <= options.repetitions; ++rep) {
    for (std::size_t i = 0; i < count; ++i) {
      const Graph& g = instances[i];
      if (g.vertex_count() > options.oracle_cutoff) continue;
      const std::int64_t ns = time_once([&] {
        volatile int d = brute_diameter(g).diameter;
        (void)d;
      });
      if (rep > 0) oracle_samples[i].push_back(ns);
    }
  }

  if (csv) *csv << "n,m,algo_ns,oracle_ns\n";
  std::vector<BenchRow> rows;
  for (std::size_t i = 0; i < count; ++i) {
    BenchRow row;
    row.n = instances[i].vertex_count();
    row.m = instances[i].edge_count();
    row.algo_ns = median(algo_samples[i]);
    if (!oracle_samples[i].empty()) row.oracle_ns = median(oracle_samples[i]);
    rows.push_back(row);
    if (csv)
      *csv << row.n << ',' << row.m << ',' << row.algo_ns << ','
           << row.oracle_ns << '\n';
  }
  return rows;
}

}  // namespace hfdiam
