#ifndef HFDIAM_ERRORS_HPP
#define HFDIAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hfdiam {

// Base class for all library errors. The CLI maps the derived families to
// distinct exit codes (2 parse, 3 unsupported class, 4 not connected,
// 5 resource limits).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (graph files, H-spec strings, DIMACS, OV files).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally invalid graph input: self-loop or endpoint out of range.
class InvalidEdge : public Error {
 public:
  using Error::Error;
};

// Vertex id outside [0, n).
class InvalidVertex : public Error {
 public:
  using Error::Error;
};

// A diameter algorithm was given a disconnected (or empty) graph.
class NotConnected : public Error {
 public:
  using Error::Error;
};

// dispatch() was asked for a class no algorithm covers.
class UnsupportedClass : public Error {
 public:
  using Error::Error;
};

// Resource limit exceeded (enumeration size, oracle caps, generator caps).
class TooLarge : public Error {
 public:
  using Error::Error;
};

// find_induced_linear_forest called with a pattern above its configured cap.
class ForestTooLarge : public TooLarge {
 public:
  using TooLarge::TooLarge;
};

// CNF formula violates its invariants (empty clause, literal out of range).
class InvalidFormula : public Error {
 public:
  using Error::Error;
};

// OV instance or hardness-generator input violates its invariants.
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

// augment_to_pt called with an even or too-small t.
class InvalidT : public Error {
 public:
  using Error::Error;
};

}  // namespace hfdiam

#endif
