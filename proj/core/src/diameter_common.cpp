#include <algorithm>
#include <string>

#include "diam_internal.hpp"
#include "hfdiam/diagnostics.hpp"
#include "hfdiam/errors.hpp"
#include "hfdiam/graph_algos.hpp"

namespace hfdiam {

DiameterOutcome DiameterOutcome::exact(int diameter, Witness w) {
  return {OutcomeKind::ExactDiameter, diameter, std::move(w)};
}
DiameterOutcome DiameterOutcome::dmax_yes(int dmax, Witness w) {
  return {OutcomeKind::DmaxYes, dmax, std::move(w)};
}
DiameterOutcome DiameterOutcome::dmax_no() {
  return {OutcomeKind::DmaxNo, -1, std::nullopt};
}
DiameterOutcome DiameterOutcome::not_in_class() {
  return {OutcomeKind::NotInClass, -1, std::nullopt};
}

bool validate_outcome(const Graph& g, const DiameterOutcome& out) {
  switch (out.kind) {
    case OutcomeKind::DmaxNo:
    case OutcomeKind::NotInClass:
      return !out.witness.has_value();
    case OutcomeKind::ExactDiameter:
    case OutcomeKind::DmaxYes:
      break;
  }
  if (!out.witness) return false;
  const Witness& w = *out.witness;
  if (w.path.empty()) return false;
  if (w.path.front() != w.u || w.path.back() != w.v) return false;
  const int n = g.vertex_count();
  for (int v : w.path)
    if (v < 0 || v >= n) return false;
  for (std::size_t i = 0; i + 1 < w.path.size(); ++i)
    if (!g.has_edge(w.path[i], w.path[i + 1])) return false;
  const int len = static_cast<int>(w.path.size()) - 1;
  if (out.value != len) return false;
  return bfs(g, w.u).dist[w.v] == len;
}

namespace detail {

void require_connected(const Graph& g) {
  if (g.vertex_count() == 0)
    throw NotConnected("empty graph has no diameter");
  if (!is_connected(g)) throw NotConnected("graph is not connected");
}

Witness witness_to(const BfsLayers& layers, int target) {
  Witness w;
  w.u = layers.source;
  w.v = target;
  w.path = path_to(layers, target);
  return w;
}

DiameterOutcome clique_outcome(const Graph& g) {
  if (g.vertex_count() == 1)
    return DiameterOutcome::exact(0, Witness{0, 0, {0}});
  return DiameterOutcome::exact(1, Witness{0, 1, {0, 1}});
}

std::optional<Witness> len2_witness(const Graph& g) {
  const int n = g.vertex_count();
  int a = -1;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) < n - 1) {
      a = v;
      break;
    }
  if (a < 0) return std::nullopt;  // complete graph
  std::vector<char> closed(n, 0);
  closed[a] = 1;
  for (int w : g.neighbors(a)) closed[w] = 1;
  int b = -1;
  for (int v = 0; v < n; ++v)
    if (!closed[v]) {
      b = v;
      break;
    }
  for (int y : g.neighbors(b))
    if (y != a && closed[y]) return Witness{a, b, {a, y, b}};
  return std::nullopt;
}

DiameterOutcome beyond_dmax(const char* algo, int ecc, int dmax,
                            TrustMode mode) {
  emit_diagnostic(std::string(algo) + ": BFS eccentricity " +
                  std::to_string(ecc) + " exceeds d_max " +
                  std::to_string(dmax) +
                  "; input is outside the assumed class");
  return mode == TrustMode::Verified ? DiameterOutcome::not_in_class()
                                     : DiameterOutcome::dmax_no();
}

int min_degree_vertex(const Graph& g) {
  int best = 0;
  for (int v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) < g.degree(best)) best = v;
  return best;
}

}  // namespace detail
}  // namespace hfdiam
