#pragma once

#include "hsq/topology.hpp"

namespace hsq {

// Straightforward serial transfer counting, kept as a reference the
// optimized engine is tested against. Row updates filter full state
// lists by mask tests; the triangle is contracted from its wide row
// downward (the engine grows from the apex). Usable up to moderate
// widths only.
ExactCount reference_count(const GridInstance& inst);

}  // namespace hsq
