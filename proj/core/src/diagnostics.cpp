#include "hfdiam/diagnostics.hpp"

#include <atomic>

namespace hfdiam {

namespace {
std::atomic<DiagnosticFn> g_handler{nullptr};
}

void set_diagnostic_handler(DiagnosticFn fn) {
  g_handler.store(fn, std::memory_order_relaxed);
}

namespace detail {

void emit_diagnostic(std::string_view message) {
  if (DiagnosticFn fn = g_handler.load(std::memory_order_relaxed))
    fn(message);
}

}  // namespace detail
}  // namespace hfdiam
