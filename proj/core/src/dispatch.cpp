#include <vector>

#include "diam_internal.hpp"
#include "hfdiam/errors.hpp"
#include "hfdiam/graph_algos.hpp"
#include "hfdiam/structure.hpp"

namespace hfdiam {

namespace {

using detail::clique_outcome;
using detail::len2_witness;
using detail::require_connected;

// H inside P4 forces diameter at most 2: a clique test plus one
// nonadjacent pair with a common neighbor settles the answer.
DiameterOutcome diameter_within_p4(const Graph& g, TrustMode /*mode*/) {
  require_connected(g);
  if (is_clique(g)) return clique_outcome(g);
  if (auto w = len2_witness(g)) return DiameterOutcome::exact(2, std::move(*w));
  // the probed pair sits at distance >= 3, so its shortest path induces a P4
  return DiameterOutcome::not_in_class();
}

bool parts_are(const LinearForest& h, std::initializer_list<int> parts) {
  return std::equal(h.parts().begin(), h.parts().end(), parts.begin(),
                    parts.end());
}

using AlgoFn = DiameterOutcome (*)(const Graph&, TrustMode);

struct Route {
  AlgoFn fn;
  bool exact;
};

Route route_of(const LinearForest& h) {
  if (parts_are(h, {2, 1, 1})) return {diameter_p2_2p1, true};
  if (parts_are(h, {1, 1, 1})) return {diameter_3p1, true};
  if (parts_are(h, {3, 1})) return {diameter_p3_p1, true};
  // the remaining subgraphs of P2+2P1, P3+P1, and P4 all force diameter <= 2
  if (parts_are(h, {4}) || parts_are(h, {3}) || parts_are(h, {2, 1}) ||
      parts_are(h, {2}) || parts_are(h, {1, 1}) || parts_are(h, {1}))
    return {diameter_within_p4, true};

  if (parts_are(h, {1, 1, 1, 1})) return {dmax_4p1, false};
  if (parts_are(h, {2, 1, 1, 1})) return {dmax_p2_3p1, false};
  if (parts_are(h, {3, 1, 1})) return {dmax_p3_2p1, false};
  if (parts_are(h, {2, 2, 1})) return {dmax_2p2_p1, false};
  if (parts_are(h, {4, 1})) return {dmax_p4_p1, false};
  return {nullptr, false};
}

}  // namespace

bool class_supported(const LinearForest& h) {
  return route_of(h).fn != nullptr;
}

bool class_has_exact_algorithm(const LinearForest& h) {
  const Route r = route_of(h);
  return r.fn != nullptr && r.exact;
}

DiameterOutcome dispatch(const LinearForest& h, const Graph& g,
                         TrustMode mode) {
  const Route route = route_of(h);
  if (!route.fn)
    throw UnsupportedClass(
        "no algorithm for " + h.to_string() +
        "-free graphs; supported: P2+2P1, 3P1, P3+P1, P4 (and their "
        "subclasses P3, P2+P1, P2, 2P1, P1) for exact diameter; 4P1, "
        "P4+P1, P3+2P1, P2+3P1, 2P2+P1 for the d_max decision");
  if (mode == TrustMode::Verified) {
    require_connected(g);
    if (find_induced_linear_forest(g, h))
      return DiameterOutcome::not_in_class();
  }
  return route.fn(g, mode);
}

}  // namespace hfdiam
