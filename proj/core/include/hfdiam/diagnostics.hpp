#ifndef HFDIAM_DIAGNOSTICS_HPP
#define HFDIAM_DIAGNOSTICS_HPP

#include <string_view>

namespace hfdiam {

// Receives notes about precondition anomalies the algorithms detect but
// absorb (e.g. a BFS eccentricity beyond the class's d_max in trusting
// mode). Null disables reporting; install before any concurrent use.
using DiagnosticFn = void (*)(std::string_view);

void set_diagnostic_handler(DiagnosticFn fn);

namespace detail {
void emit_diagnostic(std::string_view message);
}

}  // namespace hfdiam

#endif
