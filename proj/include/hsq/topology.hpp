#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hsq {

// Exact nonnegative enumeration result. Always >= 1 for a valid
// instance: the empty set is independent in every graph.
using ExactCount = mpz_class;

enum class Topology {
  PlaneGrid,
  TriParallelogram,
  TriTriangle,
  Cylinder,
  TwistedCylinder,
};

inline constexpr Topology kAllTopologies[] = {
    Topology::PlaneGrid,    Topology::TriParallelogram, Topology::TriTriangle,
    Topology::Cylinder,     Topology::TwistedCylinder,
};

// Token used by the CLI and the cache file format.
const char* topology_name(Topology t);
bool parse_topology(const std::string& token, Topology* out);

// One counting request. m is the vertex count per row (width, or
// circumference for the wrapped families). TriTriangle carries a single
// size parameter: n is the triangle width and m is stored equal to n.
struct GridInstance {
  Topology topology;
  int m;
  int n;

  GridInstance(Topology t, int m_, int n_);
  static GridInstance triangle(int width) {
    return GridInstance(Topology::TriTriangle, width, width);
  }

  long vertex_count() const;
  std::string str() const;
};

struct AdjacencyList {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // normalized a < b, deduplicated
  std::vector<int> self_loops;             // vertices that can never be occupied
};

// Exact adjacency for each family. Diagonal direction for the triangular
// families is pinned to (i,j)-(i+1,j+1); the twisted cylinder helix is an
// open chain (no end wrap).
AdjacencyList build_adjacency(const GridInstance& inst);

// Ground-truth oracle: exhaustive subset recursion with early pruning.
// Rejects instances above the vertex cap.
ExactCount brute_force_count(const GridInstance& inst, int vertex_cap = 30);

}  // namespace hsq
