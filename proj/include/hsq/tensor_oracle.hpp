#pragma once

#include <cstdint>

#include "hsq/topology.hpp"

namespace hsq {

enum class TensorKind { Grid, Triangle };

// 2x2x2x2 vertex tensor with 0/1 entries indexed (up, right, down, left).
// Each nonzero index pattern is one admissible local bold-edge picture.
struct VertexTensor {
  uint8_t e[2][2][2][2] = {};
  int nonzero_count() const;
  bool at(int u, int r, int d, int l) const { return e[u][r][d][l] != 0; }
};

// Slot semantics (pinned by the oracle-validation test, unit square grid):
//   Grid: an occupied vertex bolds its up and right edges, so
//     up = r = [vertex occupied], down/left = [neighbor below/left occupied].
//     Nonzero patterns: 0000, 1100, 0011, 0010, 0001.
//   Triangle: an occupied vertex bolds its down and right edges, so
//     right = down = [vertex occupied], up/left = [neighbor above/left
//     occupied]; the up&left pattern is dropped, which is exactly the
//     diagonal exclusion of the triangular families.
//     Nonzero patterns: 0000, 0110, 1000, 0001.
VertexTensor build_vertex_tensor(TensorKind kind);

// Boundary rule per open index: indices on sides a bold edge may exit
// through are summed over {0,1}; the remaining sides are fixed to 0.
// Grid: top/right summed, bottom/left fixed. Triangle: bottom/right
// summed, top/left fixed (rows shrink upward along the hypotenuse).
struct NetworkLayout {
  TensorKind kind;
  int m = 0;
  int n = 0;
  static NetworkLayout grid(int m, int n) { return {TensorKind::Grid, m, n}; }
  static NetworkLayout triangle(int n) { return {TensorKind::Triangle, n, n}; }
};

// Full contraction by row-major absorption into a boundary vector.
// Oracle scale only: dimensions <= 6.
ExactCount contract_network(const NetworkLayout& layout);

}  // namespace hsq
