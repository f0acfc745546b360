// hfdiam: diameter algorithms for H-free graph classes.
//
// Verbs: diam, dmax-check, oracle, verify, gen, gen-hard, bench.
// Exit codes: 0 ok, 2 parse error, 3 unsupported class, 4 not connected,
// 5 resource limit.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hfdiam/bench_harness.hpp"
#include "hfdiam/bfs.hpp"
#include "hfdiam/diameter.hpp"
#include "hfdiam/errors.hpp"
#include "hfdiam/generator.hpp"
#include "hfdiam/hardness.hpp"
#include "hfdiam/io.hpp"
#include "hfdiam/linear_forest.hpp"
#include "hfdiam/oracle.hpp"
#include "hfdiam/structure.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitNotConnected = 4;
constexpr int kExitTooLarge = 5;

void print_witness(std::ostream& out, const hfdiam::Witness& w) {
  out << "witness:";
  for (int v : w.path) out << ' ' << v;
  out << '\n';
}

// Streams to the named file, or stdout for "-".
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw hfdiam::ParseError("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int run_diam(const std::string& class_spec, const std::string& path,
             bool verified) {
  const hfdiam::LinearForest h = hfdiam::parse_h_spec(class_spec);
  if (!hfdiam::class_has_exact_algorithm(h))
    throw hfdiam::UnsupportedClass(
        "diam needs a class with an exact-diameter algorithm (P2+2P1, 3P1, "
        "P3+P1, P4 or a subclass); for " + h.to_string() +
        " try dmax-check");
  const hfdiam::Graph g = hfdiam::parse_graph_file(path);
  const hfdiam::DiameterOutcome out = hfdiam::dispatch(
      h, g, verified ? hfdiam::TrustMode::Verified
                     : hfdiam::TrustMode::Trusting);
  if (out.kind == hfdiam::OutcomeKind::NotInClass) {
    std::cout << "not " << h.to_string() << "-free\n";
    return kExitOk;
  }
  std::cout << "diameter " << out.value << '\n';
  if (out.witness) print_witness(std::cout, *out.witness);
  return kExitOk;
}

int run_dmax_check(const std::string& class_spec, const std::string& path,
                   bool verified) {
  const hfdiam::LinearForest h = hfdiam::parse_h_spec(class_spec);
  if (!hfdiam::class_supported(h) || hfdiam::class_has_exact_algorithm(h))
    throw hfdiam::UnsupportedClass(
        "dmax-check covers 4P1, P4+P1, P3+2P1, P2+3P1, and 2P2+P1; for "
        "classes with an exact algorithm use diam");
  const hfdiam::Graph g = hfdiam::parse_graph_file(path);
  const hfdiam::DiameterOutcome out = hfdiam::dispatch(
      h, g, verified ? hfdiam::TrustMode::Verified
                     : hfdiam::TrustMode::Trusting);
  if (out.kind == hfdiam::OutcomeKind::NotInClass) {
    std::cout << "not " << h.to_string() << "-free\n";
    return kExitOk;
  }
  std::cout << "dmax(" << h.dmax() << "): "
            << (out.kind == hfdiam::OutcomeKind::DmaxYes ? "YES" : "NO")
            << '\n';
  if (out.witness) print_witness(std::cout, *out.witness);
  return kExitOk;
}

int run_oracle(const std::string& path) {
  const hfdiam::Graph g = hfdiam::parse_graph_file(path);
  const hfdiam::OracleResult r = hfdiam::brute_diameter(g);
  std::cout << "diameter " << r.diameter << '\n';
  const hfdiam::BfsLayers layers = hfdiam::bfs(g, r.pair.first);
  hfdiam::Witness w{r.pair.first, r.pair.second,
                    hfdiam::path_to(layers, r.pair.second)};
  print_witness(std::cout, w);
  return kExitOk;
}

int run_verify(const std::string& class_spec, const std::string& path,
               int cap) {
  const hfdiam::LinearForest h = hfdiam::parse_h_spec(class_spec);
  const hfdiam::Graph g = hfdiam::parse_graph_file(path);
  const auto embedding = hfdiam::find_induced_linear_forest(g, h, cap);
  if (!embedding) {
    std::cout << h.to_string() << "-free: yes\n";
    return kExitOk;
  }
  std::cout << h.to_string() << "-free: no\n" << "embedding:";
  for (std::size_t p = 0; p < embedding->size(); ++p) {
    if (p > 0) std::cout << " |";
    for (int v : (*embedding)[p]) std::cout << ' ' << v;
  }
  std::cout << '\n';
  return kExitOk;
}

int run_gen(const std::string& class_spec, int n, std::uint64_t seed,
            int attempts, const std::string& out_path) {
  const hfdiam::LinearForest h = hfdiam::parse_h_spec(class_spec);
  hfdiam::GenOptions options;
  options.attempts = attempts;
  const hfdiam::GenResult gen = hfdiam::generate_hfree(h, n, seed, options);
  OutputTarget out(out_path);
  hfdiam::write_edge_list(out.stream(), gen.graph);
  std::cerr << "generated " << h.to_string() << "-free instance: n="
            << gen.graph.vertex_count() << " m=" << gen.graph.edge_count()
            << (gen.fallback_used ? " (guaranteed construction)" : "")
            << '\n';
  return kExitOk;
}

int run_gen_hard(const std::string& cnf_path, const std::string& ov_path,
                 int pt, bool three_clique, const std::string& out_path) {
  if (cnf_path.empty() == ov_path.empty())
    throw hfdiam::ParseError("gen-hard needs exactly one of --cnf or --ov");
  hfdiam::HardInstance inst;
  if (!cnf_path.empty()) {
    if (three_clique)
      throw hfdiam::ParseError("--three-clique applies to --ov inputs only");
    inst = hfdiam::split_from_cnf(hfdiam::parse_cnf_file(cnf_path));
    if (pt != 5) inst = hfdiam::augment_to_pt(inst, pt);
  } else {
    if (pt != 5)
      throw hfdiam::ParseError("--pt applies to --cnf inputs only");
    const hfdiam::OvInstance ov = hfdiam::parse_ov_file(ov_path);
    inst = three_clique ? hfdiam::three_clique_from_ov(ov)
                        : hfdiam::split_from_ov(ov);
  }
  OutputTarget out(out_path);
  hfdiam::write_hard_instance(out.stream(), inst);
  std::cerr << "hardness instance: n=" << inst.graph.vertex_count()
            << " m=" << inst.graph.edge_count() << " diameter "
            << inst.diameter_if_negative << " or "
            << inst.diameter_if_positive << '\n';
  return kExitOk;
}

int run_bench(const std::string& class_spec, const std::string& sizes_text,
              std::uint64_t seed, int reps, long long oracle_cutoff) {
  const hfdiam::LinearForest h = hfdiam::parse_h_spec(class_spec);
  hfdiam::BenchOptions options;
  options.seed = seed;
  options.repetitions = reps;
  options.oracle_cutoff = oracle_cutoff;
  std::istringstream sizes(sizes_text);
  std::string token;
  while (std::getline(sizes, token, ','))
    if (!token.empty()) options.sizes.push_back(std::stoll(token));
  hfdiam::run_bench_suite(h, options, &std::cout);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diameter algorithms for H-free graph classes"};
  app.require_subcommand(1);

  std::string class_spec, graph_path, out_path = "-";
  std::string cnf_path, ov_path, sizes = "1000,2000,4000";
  bool verified = false, three_clique = false;
  int n = 100, attempts = 200, pt = 5, reps = 5, cap = 7;
  std::uint64_t seed = 0;
  long long oracle_cutoff = 20000;

  auto* diam = app.add_subcommand("diam", "exact diameter for a class");
  diam->add_option("--class", class_spec, "H-spec, e.g. P2+2P1")->required();
  diam->add_option("graph", graph_path, "edge-list file")->required();
  diam->add_flag("--verified", verified, "check class membership first");

  auto* dmax = app.add_subcommand("dmax-check", "decide diameter == d_max");
  dmax->add_option("--class", class_spec, "H-spec, e.g. 4P1")->required();
  dmax->add_option("graph", graph_path, "edge-list file")->required();
  dmax->add_flag("--verified", verified, "check class membership first");

  auto* oracle = app.add_subcommand("oracle", "brute-force diameter");
  oracle->add_option("graph", graph_path, "edge-list file")->required();

  auto* verify = app.add_subcommand("verify", "H-freeness check");
  verify->add_option("--class", class_spec, "H-spec")->required();
  verify->add_option("graph", graph_path, "edge-list file")->required();
  verify->add_option("--cap", cap, "containment search size cap");

  auto* gen = app.add_subcommand("gen", "generate an H-free instance");
  gen->add_option("--class", class_spec, "H-spec")->required();
  gen->add_option("--n", n, "vertex count")->required();
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--attempts", attempts, "rejection budget, 0 = fallback");
  gen->add_option("-o,--output", out_path, "output file, - for stdout");

  auto* gen_hard = app.add_subcommand("gen-hard",
                                      "hardness-construction instances");
  gen_hard->add_option("--cnf", cnf_path, "DIMACS cnf input");
  gen_hard->add_option("--ov", ov_path, "orthogonal-vectors input");
  gen_hard->add_option("--pt", pt, "augment the CNF split graph to odd P_t");
  gen_hard->add_flag("--three-clique", three_clique,
                     "4P1-free three-clique variant (OV only)");
  gen_hard->add_option("-o,--output", out_path, "output file, - for stdout");

  auto* bench = app.add_subcommand("bench", "size sweep, CSV to stdout");
  bench->add_option("--class", class_spec, "H-spec")->required();
  bench->add_option("--sizes", sizes, "comma-separated ascending sizes");
  bench->add_option("--seed", seed, "RNG seed");
  bench->add_option("--reps", reps, "timed repetitions per size");
  bench->add_option("--oracle-cutoff", oracle_cutoff,
                    "skip the brute oracle above this n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (diam->parsed()) return run_diam(class_spec, graph_path, verified);
    if (dmax->parsed()) return run_dmax_check(class_spec, graph_path, verified);
    if (oracle->parsed()) return run_oracle(graph_path);
    if (verify->parsed()) return run_verify(class_spec, graph_path, cap);
    if (gen->parsed()) return run_gen(class_spec, n, seed, attempts, out_path);
    if (gen_hard->parsed())
      return run_gen_hard(cnf_path, ov_path, pt, three_clique, out_path);
    if (bench->parsed())
      return run_bench(class_spec, sizes, seed, reps, oracle_cutoff);
  } catch (const hfdiam::UnsupportedClass& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const hfdiam::NotConnected& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNotConnected;
  } catch (const hfdiam::TooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitTooLarge;
  } catch (const hfdiam::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitOk;
}
