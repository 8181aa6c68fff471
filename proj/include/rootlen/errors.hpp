#ifndef ROOTLEN_ERRORS_HPP
#define ROOTLEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rootlen {

/// Bad type/rank, malformed coordinates, out-of-range indices.
struct InvalidInput : std::runtime_error {
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration (orbit, slab scan, DP state space) exceeded its configured cap.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rootlen

#endif
