#ifndef HFDIAM_DIAMETER_HPP
#define HFDIAM_DIAMETER_HPP

#include <optional>
#include <vector>

#include "hfdiam/graph.hpp"
#include "hfdiam/linear_forest.hpp"

namespace hfdiam {

enum class OutcomeKind {
  ExactDiameter,  // value holds the diameter, witness realizes it
  DmaxYes,        // diameter equals the class's d_max, witness realizes it
  DmaxNo,         // diameter differs from d_max
  NotInClass,     // the input provably contains the forbidden forest
};

// A vertex pair together with a shortest path realizing their distance.
struct Witness {
  int u = -1;
  int v = -1;
  std::vector<int> path;  // u .. v, consecutive vertices adjacent
};

struct DiameterOutcome {
  OutcomeKind kind;
  int value = -1;  // diameter (ExactDiameter) or d_max (DmaxYes); else -1
  std::optional<Witness> witness;

  static DiameterOutcome exact(int diameter, Witness w);
  static DiameterOutcome dmax_yes(int dmax, Witness w);
  static DiameterOutcome dmax_no();
  static DiameterOutcome not_in_class();
};

// The d_max deciders assume class membership, as the underlying theorems
// do. Verified mode pays for a containment search up front and reports
// NotInClass instead of trusting the caller; it also turns the
// beyond-d_max BFS sentinel into NotInClass rather than DmaxNo.
enum class TrustMode { Trusting, Verified };

// Exact diameter of a (P2+2P1)-free graph, or NotInClass when the input
// provably contains a P2+2P1. The returned shortest path is diametral
// whenever the input really is (P2+2P1)-free. O(n + m).
DiameterOutcome diameter_p2_2p1(const Graph& g,
                                TrustMode mode = TrustMode::Trusting);

// Exact diameter for 3P1-free inputs; any 3P1-free graph is (P2+2P1)-free,
// so this delegates.
DiameterOutcome diameter_3p1(const Graph& g,
                             TrustMode mode = TrustMode::Trusting);

// Exact diameter for (P3+P1)-free inputs.
DiameterOutcome diameter_p3_p1(const Graph& g,
                               TrustMode mode = TrustMode::Trusting);

// Decides diameter == d_max for the class, assuming membership:
//   (P4+P1)-free : d_max = 4
//   (P3+2P1)-free: d_max = 5     4P1-free : d_max = 5 (delegates)
//   (P2+3P1)-free: d_max = 6     (2P2+P1)-free: d_max = 5
DiameterOutcome dmax_p4_p1(const Graph& g,
                           TrustMode mode = TrustMode::Trusting);
DiameterOutcome dmax_p3_2p1(const Graph& g,
                            TrustMode mode = TrustMode::Trusting);
DiameterOutcome dmax_4p1(const Graph& g,
                         TrustMode mode = TrustMode::Trusting);
DiameterOutcome dmax_p2_3p1(const Graph& g,
                            TrustMode mode = TrustMode::Trusting);
DiameterOutcome dmax_2p2_p1(const Graph& g,
                            TrustMode mode = TrustMode::Trusting);

// Routes to the algorithm covering the class named by h: exact diameter
// for h inside P2+2P1, P3+P1, or P4; d_max decision for 4P1, P2+3P1,
// P3+2P1, 2P2+P1, and P4+P1. Throws UnsupportedClass for anything else.
DiameterOutcome dispatch(const LinearForest& h, const Graph& g,
                         TrustMode mode = TrustMode::Trusting);

// True iff dispatch() accepts this class.
bool class_supported(const LinearForest& h);
// True iff dispatch() answers with the exact diameter (vs a d_max decision).
bool class_has_exact_algorithm(const LinearForest& h);

// Checks the DiameterOutcome invariants: witness presence per kind, the
// path connects its pair with adjacent steps, and a BFS from one endpoint
// confirms the length as the exact distance.
bool validate_outcome(const Graph& g, const DiameterOutcome& out);

}  // namespace hfdiam

#endif
