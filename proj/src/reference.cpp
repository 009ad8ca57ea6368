#include "hsq/reference.hpp"

#include <unordered_map>

#include "hsq/state_space.hpp"

namespace hsq {

namespace {

ExactCount ref_rows(int m, int n, bool diag, bool cyclic) {
  StateSpace sp = enumerate_row_states(m, cyclic);
  const auto& st = sp.states;
  std::vector<ExactCount> v(st.size(), 1), w(st.size());
  for (int row = 2; row <= n; ++row) {
    for (size_t t = 0; t < st.size(); ++t) {
      ExactCount acc = 0;
      for (size_t s = 0; s < st.size(); ++s) {
        if (st[s] & st[t]) continue;
        if (diag && ((st[s] << 1) & st[t])) continue;
        acc += v[s];
      }
      w[t] = acc;
    }
    std::swap(v, w);
  }
  ExactCount total = 0;
  for (const auto& x : v) total += x;
  return total;
}

// Shrinking-width contraction: row widths n, n-1, ..., 1. Local masks of
// row j+1 sit one column right of row j, so the rule is
// (s & t) == 0 and ((s >> 1) & t) == 0 with s the wider row.
ExactCount ref_triangle(int n) {
  std::vector<uint64_t> wide = enumerate_row_states(n, false).states;
  std::vector<ExactCount> v(wide.size(), 1);
  for (int w = n - 1; w >= 1; --w) {
    std::vector<uint64_t> narrow = enumerate_row_states(w, false).states;
    std::vector<ExactCount> nv(narrow.size());
    for (size_t t = 0; t < narrow.size(); ++t) {
      ExactCount acc = 0;
      for (size_t s = 0; s < wide.size(); ++s) {
        if (wide[s] & narrow[t]) continue;
        if ((wide[s] >> 1) & narrow[t]) continue;
        acc += v[s];
      }
      nv[t] = acc;
    }
    wide = std::move(narrow);
    v = std::move(nv);
  }
  ExactCount total = 0;
  for (const auto& x : v) total += x;
  return total;
}

ExactCount ref_twisted(int m, int n) {
  const uint64_t mask = (uint64_t(1) << m) - 1;
  std::unordered_map<uint64_t, ExactCount> v;
  v[0] = 1;
  const long sites = long(m) * n;
  for (long k = 0; k < sites; ++k) {
    std::unordered_map<uint64_t, ExactCount> nv;
    for (const auto& [win, cnt] : v) {
      nv[(win << 1) & mask] += cnt;  // site unoccupied
      bool left_free = !(win & 1);
      bool up_free = !((win >> (m - 1)) & 1);
      if (left_free && up_free) nv[((win << 1) | 1) & mask] += cnt;
    }
    v = std::move(nv);
  }
  ExactCount total = 0;
  for (const auto& [win, cnt] : v) total += cnt;
  return total;
}

}  // namespace

ExactCount reference_count(const GridInstance& inst) {
  switch (inst.topology) {
    case Topology::PlaneGrid:
      return ref_rows(inst.m, inst.n, false, false);
    case Topology::TriParallelogram:
      return ref_rows(inst.m, inst.n, true, false);
    case Topology::TriTriangle:
      return ref_triangle(inst.n);
    case Topology::Cylinder:
      return ref_rows(inst.m, inst.n, false, true);
    case Topology::TwistedCylinder:
      return ref_twisted(inst.m, inst.n);
  }
  throw std::logic_error("bad topology");
}

}  // namespace hsq
