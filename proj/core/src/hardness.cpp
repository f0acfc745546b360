#include "hfdiam/hardness.hpp"

#include <cstdlib>
#include <string>

#include "hfdiam/errors.hpp"

namespace hfdiam {

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) {
    h ^= (x >> (8 * i)) & 0xff;
    h *= 1099511628211ull;
  }
  return h;
}
constexpr std::uint64_t kFnvSeed = 1469598103934665603ull;

}  // namespace

void CnfFormula::validate() const {
  if (num_vars < 0) throw InvalidFormula("negative variable count");
  for (const auto& clause : clauses) {
    if (clause.empty()) throw InvalidFormula("empty clause");
    for (int lit : clause)
      if (lit == 0 || std::abs(lit) > num_vars)
        throw InvalidFormula("literal out of range: " + std::to_string(lit));
  }
}

void OvInstance::validate() const {
  if (dim < 1) throw InvalidInstance("vector dimension must be >= 1");
  if (set_a.empty() || set_b.empty())
    throw InvalidInstance("both vector sets must be nonempty");
  for (const auto* set : {&set_a, &set_b})
    for (const auto& vec : *set)
      if (static_cast<int>(vec.size()) != dim)
        throw InvalidInstance("vector length differs from dimension");
}

const char* role_name(VertexRole role) {
  switch (role) {
    case VertexRole::S1Assignment: return "s1";
    case VertexRole::S2Assignment: return "s2";
    case VertexRole::Clause: return "clause";
    case VertexRole::T1: return "t1";
    case VertexRole::T2: return "t2";
    case VertexRole::AugmentationPath: return "path";
  }
  return "?";
}

HardInstance split_from_cnf(const CnfFormula& f) {
  f.validate();
  if (f.num_vars > 26)
    throw TooLarge("split construction capped at 26 variables");

  // pad an odd variable count with one variable used by no clause
  const int vars = f.num_vars + (f.num_vars % 2);
  const int half = vars / 2;
  const int side = 1 << half;  // assignments per half
  const int m = static_cast<int>(f.clauses.size());

  const int s2_base = side;
  const int t1 = 2 * side;
  const int t2 = t1 + 1;
  const int clause_base = t1 + 2;
  const int n = clause_base + m;

  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < side; ++j) edges.emplace_back(t1, j);
  for (int j = 0; j < side; ++j) edges.emplace_back(t2, s2_base + j);
  for (int a = t1; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);

  // assignment j of a half: bit k gives the value of the half's k-th
  // variable; an edge marks a clause the partial assignment fails
  auto add_failure_edges = [&](int first_var, int base) {
    for (int j = 0; j < side; ++j) {
      for (int ci = 0; ci < m; ++ci) {
        bool satisfied = false;
        for (int lit : f.clauses[ci]) {
          const int var = std::abs(lit);
          if (var < first_var || var >= first_var + half) continue;
          const bool value = (j >> (var - first_var)) & 1;
          if (value == (lit > 0)) {
            satisfied = true;
            break;
          }
        }
        if (!satisfied) edges.emplace_back(base + j, clause_base + ci);
      }
    }
  };
  add_failure_edges(1, 0);
  add_failure_edges(1 + half, s2_base);

  HardInstance inst;
  inst.graph = Graph::from_edges(n, edges);
  inst.roles.assign(n, VertexRole::Clause);
  for (int j = 0; j < side; ++j) inst.roles[j] = VertexRole::S1Assignment;
  for (int j = 0; j < side; ++j)
    inst.roles[s2_base + j] = VertexRole::S2Assignment;
  inst.roles[t1] = VertexRole::T1;
  inst.roles[t2] = VertexRole::T2;

  std::uint64_t h = fnv1a(kFnvSeed, static_cast<std::uint64_t>(f.num_vars));
  for (const auto& clause : f.clauses) {
    for (int lit : clause)
      h = fnv1a(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(lit)));
    h = fnv1a(h, 0);
  }
  inst.source_hash = h;
  return inst;
}

HardInstance augment_to_pt(const HardInstance& inst, int t) {
  if (t < 5 || t % 2 == 0)
    throw InvalidT("augmentation needs an odd t >= 5, got " +
                   std::to_string(t));
  for (VertexRole role : inst.roles)
    if (role == VertexRole::AugmentationPath)
      throw InvalidInstance("instance was already augmented");

  const int c = (t - 5) / 2;
  if (c == 0) return inst;

  const int n = inst.graph.vertex_count();
  std::vector<std::pair<int, int>> edges = inst.graph.edges();
  std::vector<VertexRole> roles = inst.roles;
  int next = n;
  for (int v = 0; v < n; ++v) {
    if (roles[v] != VertexRole::S1Assignment &&
        roles[v] != VertexRole::S2Assignment)
      continue;
    int prev = v;
    for (int i = 0; i < c; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  roles.resize(next, VertexRole::AugmentationPath);

  HardInstance out;
  out.graph = Graph::from_edges(next, edges);
  out.roles = std::move(roles);
  out.source_hash = inst.source_hash;
  out.diameter_if_positive = inst.diameter_if_positive + 2 * c;
  out.diameter_if_negative = inst.diameter_if_negative + 2 * c;
  return out;
}

namespace {

HardInstance ov_construction(const OvInstance& ov, bool clique_sides) {
  ov.validate();
  const auto cap = static_cast<std::int64_t>(1000000);
  if (static_cast<std::int64_t>(ov.set_a.size()) * ov.dim > cap ||
      static_cast<std::int64_t>(ov.set_b.size()) * ov.dim > cap)
    throw TooLarge("OV instance exceeds the generator edge budget");

  const int na = static_cast<int>(ov.set_a.size());
  const int nb = static_cast<int>(ov.set_b.size());
  const int s2_base = na;
  const int t1 = na + nb;
  const int t2 = t1 + 1;
  const int coord_base = t1 + 2;
  const int n = coord_base + ov.dim;

  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < na; ++j) edges.emplace_back(t1, j);
  for (int j = 0; j < nb; ++j) edges.emplace_back(t2, s2_base + j);
  for (int a = t1; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  for (int j = 0; j < na; ++j)
    for (int d = 0; d < ov.dim; ++d)
      if (ov.set_a[j][d]) edges.emplace_back(j, coord_base + d);
  for (int j = 0; j < nb; ++j)
    for (int d = 0; d < ov.dim; ++d)
      if (ov.set_b[j][d]) edges.emplace_back(s2_base + j, coord_base + d);
  if (clique_sides) {
    for (int a = 0; a < na; ++a)
      for (int b = a + 1; b < na; ++b) edges.emplace_back(a, b);
    for (int a = 0; a < nb; ++a)
      for (int b = a + 1; b < nb; ++b)
        edges.emplace_back(s2_base + a, s2_base + b);
  }

  HardInstance inst;
  inst.graph = Graph::from_edges(n, edges);
  inst.roles.assign(n, VertexRole::Clause);
  for (int j = 0; j < na; ++j) inst.roles[j] = VertexRole::S1Assignment;
  for (int j = 0; j < nb; ++j)
    inst.roles[s2_base + j] = VertexRole::S2Assignment;
  inst.roles[t1] = VertexRole::T1;
  inst.roles[t2] = VertexRole::T2;

  std::uint64_t h = fnv1a(kFnvSeed, static_cast<std::uint64_t>(ov.dim));
  for (const auto* set : {&ov.set_a, &ov.set_b}) {
    for (const auto& vec : *set) {
      std::uint64_t packed = 0;
      for (int d = 0; d < ov.dim; ++d) {
        packed = packed * 2 + vec[d];
        if (d % 63 == 62) {
          h = fnv1a(h, packed);
          packed = 0;
        }
      }
      h = fnv1a(h, packed);
    }
    h = fnv1a(h, 0);
  }
  inst.source_hash = h;
  return inst;
}

}  // namespace

HardInstance split_from_ov(const OvInstance& ov) {
  return ov_construction(ov, false);
}

HardInstance three_clique_from_ov(const OvInstance& ov) {
  return ov_construction(ov, true);
}

bool brute_sat(const CnfFormula& f) {
  f.validate();
  if (f.num_vars > 26)
    throw TooLarge("brute satisfiability capped at 26 variables");
  const std::uint32_t limit = 1u << f.num_vars;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    bool all = true;
    for (const auto& clause : f.clauses) {
      bool sat = false;
      for (int lit : clause) {
        const bool value = (mask >> (std::abs(lit) - 1)) & 1;
        if (value == (lit > 0)) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

bool has_orthogonal_pair(const OvInstance& ov) {
  ov.validate();
  for (const auto& a : ov.set_a)
    for (const auto& b : ov.set_b) {
      bool orthogonal = true;
      for (int d = 0; d < ov.dim; ++d)
        if (a[d] && b[d]) {
          orthogonal = false;
          break;
        }
      if (orthogonal) return true;
    }
  return false;
}

}  // namespace hfdiam
