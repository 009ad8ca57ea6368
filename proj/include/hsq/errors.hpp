#pragma once

#include <stdexcept>
#include <string>

namespace hsq {

// Raised when a request would exceed a configured resource limit
// (state-space size, transition-table size, vertex cap). The engine
// refuses rather than degrading.
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when stored data contradicts itself or a recomputed value
// (cache duplicate mismatch, malformed cache line).
struct IntegrityError : std::runtime_error {
  explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hsq
