#pragma once

#include <stdexcept>
#include <string>

namespace sureal {

/// Raised when a request exceeds a documented desk-scale resource cap
/// (field size, scan space, group order).  CLI maps this to exit code 3.
struct CapError : std::runtime_error {
  explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised on structurally invalid mathematical data (bad field parameters,
/// non-monic polynomial, malformed class assignment).  CLI maps this to
/// exit code 2.
struct DataError : std::invalid_argument {
  explicit DataError(const std::string& what) : std::invalid_argument(what) {}
};

/// Internal invariant check that survives NDEBUG builds.  A failure here is
/// a bug in this library, never a user error.
inline void check(bool ok, const char* msg) {
  if (!ok) throw std::logic_error(std::string("internal invariant violated: ") + msg);
}

}  // namespace sureal
