#include "hsq/topology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hsq/errors.hpp"

namespace hsq {

const char* topology_name(Topology t) {
  switch (t) {
    case Topology::PlaneGrid: return "grid";
    case Topology::TriParallelogram: return "tri-para";
    case Topology::TriTriangle: return "tri-triangle";
    case Topology::Cylinder: return "cylinder";
    case Topology::TwistedCylinder: return "twisted";
  }
  return "?";
}

bool parse_topology(const std::string& token, Topology* out) {
  for (Topology t : kAllTopologies) {
    if (token == topology_name(t)) {
      *out = t;
      return true;
    }
  }
  return false;
}

GridInstance::GridInstance(Topology t, int m_, int n_) : topology(t), m(m_), n(n_) {
  if (m < 1 || n < 1) throw std::invalid_argument("GridInstance: m and n must be >= 1");
  if (t == Topology::TriTriangle && m != n)
    throw std::invalid_argument("GridInstance: TriTriangle carries a single size parameter");
}

long GridInstance::vertex_count() const {
  if (topology == Topology::TriTriangle) return long(n) * (n + 1) / 2;
  return long(m) * n;
}

std::string GridInstance::str() const {
  if (topology == Topology::TriTriangle)
    return std::string(topology_name(topology)) + "(" + std::to_string(n) + ")";
  return std::string(topology_name(topology)) + "(" + std::to_string(m) + "," +
         std::to_string(n) + ")";
}

namespace {

struct EdgeSet {
  std::set<std::pair<int, int>> edges;
  std::set<int> loops;
  void add(int a, int b) {
    if (a == b) {
      loops.insert(a);
      return;
    }
    if (a > b) std::swap(a, b);
    edges.insert({a, b});
  }
};

}  // namespace

AdjacencyList build_adjacency(const GridInstance& inst) {
  const int m = inst.m, n = inst.n;
  EdgeSet es;
  AdjacencyList out;

  auto grid_id = [m](int i, int j) { return j * m + i; };

  switch (inst.topology) {
    case Topology::PlaneGrid:
    case Topology::TriParallelogram:
    case Topology::Cylinder: {
      out.vertex_count = m * n;
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) {
          if (i + 1 < m) es.add(grid_id(i, j), grid_id(i + 1, j));
          if (j + 1 < n) es.add(grid_id(i, j), grid_id(i, j + 1));
        }
      if (inst.topology == Topology::TriParallelogram) {
        for (int j = 0; j + 1 < n; ++j)
          for (int i = 0; i + 1 < m; ++i) es.add(grid_id(i, j), grid_id(i + 1, j + 1));
      }
      if (inst.topology == Topology::Cylinder) {
        for (int j = 0; j < n; ++j) es.add(grid_id(m - 1, j), grid_id(0, j));
      }
      break;
    }
    case Topology::TriTriangle: {
      // Row j holds columns i in [j, n); the lower-right half of the n x n
      // parallelogram, diagonal (i,j)-(i+1,j+1).
      std::vector<std::vector<int>> id(n, std::vector<int>(n, -1));
      int next = 0;
      for (int j = 0; j < n; ++j)
        for (int i = j; i < n; ++i) id[j][i] = next++;
      out.vertex_count = next;
      for (int j = 0; j < n; ++j)
        for (int i = j; i < n; ++i) {
          if (i + 1 < n) es.add(id[j][i], id[j][i + 1]);
          if (j + 1 < n && i >= j + 1) es.add(id[j][i], id[j + 1][i]);
          if (j + 1 < n && i + 1 < n) es.add(id[j][i], id[j + 1][i + 1]);
        }
      break;
    }
    case Topology::TwistedCylinder: {
      // Helix order w_k = (k mod m, k / m); consecutive sites and sites m
      // apart are adjacent. m = 1 degenerates to duplicate edges (a path).
      const long total = long(m) * n;
      out.vertex_count = int(total);
      for (long k = 0; k + 1 < total; ++k) es.add(int(k), int(k + 1));
      for (long k = 0; k + m < total; ++k) es.add(int(k), int(k + m));
      break;
    }
  }

  out.edges.assign(es.edges.begin(), es.edges.end());
  out.self_loops.assign(es.loops.begin(), es.loops.end());
  return out;
}

namespace {

// Pruned recursion over vertices in id order; `blocked` marks vertices
// adjacent to an already chosen one.
uint64_t count_rec(int idx, int v_count, uint64_t blocked, const std::vector<uint64_t>& adj,
                   uint64_t loop_mask) {
  uint64_t total = 0;
  for (;;) {
    if (idx == v_count) return total + 1;
    bool choosable = !((blocked >> idx) & 1) && !((loop_mask >> idx) & 1);
    if (choosable) {
      total += count_rec(idx + 1, v_count, blocked | adj[idx], adj, loop_mask);
    }
    ++idx;  // tail case: idx left unchosen
  }
}

}  // namespace

ExactCount brute_force_count(const GridInstance& inst, int vertex_cap) {
  AdjacencyList g = build_adjacency(inst);
  if (g.vertex_count > vertex_cap || g.vertex_count > 62)
    throw CapacityError("brute_force_count: " + inst.str() + " has " +
                        std::to_string(g.vertex_count) + " vertices, cap is " +
                        std::to_string(std::min(vertex_cap, 62)));
  std::vector<uint64_t> adj(g.vertex_count, 0);
  for (auto [a, b] : g.edges) {
    adj[a] |= uint64_t(1) << b;
    adj[b] |= uint64_t(1) << a;
  }
  uint64_t loops = 0;
  for (int v : g.self_loops) loops |= uint64_t(1) << v;
  uint64_t total = count_rec(0, g.vertex_count, 0, adj, loops);
  return ExactCount(static_cast<unsigned long>(total));
}

}  // namespace hsq
