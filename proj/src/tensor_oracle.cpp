#include "hsq/tensor_oracle.hpp"

#include <vector>

#include "hsq/errors.hpp"

namespace hsq {

int VertexTensor::nonzero_count() const {
  int c = 0;
  for (int u = 0; u < 2; ++u)
    for (int r = 0; r < 2; ++r)
      for (int d = 0; d < 2; ++d)
        for (int l = 0; l < 2; ++l) c += e[u][r][d][l];
  return c;
}

VertexTensor build_vertex_tensor(TensorKind kind) {
  VertexTensor t;
  t.e[0][0][0][0] = 1;
  if (kind == TensorKind::Grid) {
    t.e[1][1][0][0] = 1;  // occupied vertex
    t.e[0][0][1][1] = 1;  // below and left neighbors occupied
    t.e[0][0][1][0] = 1;
    t.e[0][0][0][1] = 1;
  } else {
    t.e[0][1][1][0] = 1;  // occupied vertex
    t.e[1][0][0][0] = 1;  // neighbor above occupied
    t.e[0][0][0][1] = 1;  // left neighbor occupied
    // up&left pattern absent: polices the diagonal adjacency
  }
  return t;
}

ExactCount contract_network(const NetworkLayout& layout) {
  const int m = layout.m, n = layout.n;
  if (m < 1 || n < 1 || m > 6 || n > 6)
    throw CapacityError("contract_network: oracle handles dimensions 1..6 only");
  const VertexTensor T = build_vertex_tensor(layout.kind);
  const bool tri = layout.kind == TensorKind::Triangle;

  // State: one vertical bond bit per column. The horizontal carry is
  // marginalized at each row end (right boundary summed) and reset at each
  // row start (left boundary fixed 0), so between rows only the vertical
  // bits remain. Bottom boundary: fixed 0 for the grid, summed for the
  // triangle (its bold edges point downward).
  const size_t nv = size_t(1) << m;
  std::vector<uint64_t> v(nv << 1, 0);
  if (tri) {
    for (size_t s = 0; s < nv; ++s) v[s] = 1;
  } else {
    v[0] = 1;
  }

  std::vector<uint64_t> w(nv << 1);
  for (int j = 0; j < n; ++j) {
    const int i_begin = tri ? j : 0;
    for (int i = i_begin; i < m; ++i) {
      std::fill(w.begin(), w.end(), 0);
      // Grid bold edges may exit through the top: u is always an open or
      // shared index there. Triangle u-bonds leaving the shape are fixed 0.
      const bool u_free = tri ? (j + 1 <= i && j + 1 < n) : true;
      for (size_t s = 0; s < (nv << 1); ++s) {
        if (!v[s]) continue;
        const int d = int((s >> i) & 1);
        const int l = int(s >> m);
        const size_t vert = s & (nv - 1);
        for (int u = 0; u < (u_free ? 2 : 1); ++u)
          for (int r = 0; r < 2; ++r) {
            if (!T.at(u, r, d, l)) continue;
            size_t ns = (vert & ~(size_t(1) << i)) | (size_t(u) << i) | (size_t(r) << m);
            w[ns] += v[s];
          }
      }
      std::swap(v, w);
    }
    // row end: right boundary index summed over both values
    for (size_t s = 0; s < nv; ++s) v[s] += v[s | nv];
    for (size_t s = nv; s < (nv << 1); ++s) v[s] = 0;
  }

  uint64_t total = 0;
  for (size_t s = 0; s < nv; ++s) total += v[s];
  return ExactCount(static_cast<unsigned long>(total));
}

}  // namespace hsq
