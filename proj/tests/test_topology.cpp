#include <doctest.h>

#include <algorithm>

#include "hsq/errors.hpp"
#include "hsq/topology.hpp"

using namespace hsq;

namespace {

bool has_edge(const AdjacencyList& g, int a, int b) {
  if (a > b) std::swap(a, b);
  return std::find(g.edges.begin(), g.edges.end(), std::make_pair(a, b)) != g.edges.end();
}

}  // namespace

TEST_CASE("plane grid 2x2 is the 4-cycle") {
  AdjacencyList g = build_adjacency({Topology::PlaneGrid, 2, 2});
  CHECK(g.vertex_count == 4);
  CHECK(g.edges.size() == 4);
  CHECK(g.self_loops.empty());
}

TEST_CASE("cylinder m=1 degenerates to self-loops on a path") {
  AdjacencyList g = build_adjacency({Topology::Cylinder, 1, 3});
  CHECK(g.vertex_count == 3);
  CHECK(g.self_loops.size() == 3);
  CHECK(g.edges.size() == 2);  // the vertical path
  CHECK(brute_force_count({Topology::Cylinder, 1, 4}) == 1);
}

TEST_CASE("cylinder m=2 wrap edge deduplicates") {
  AdjacencyList cyl = build_adjacency({Topology::Cylinder, 2, 3});
  AdjacencyList grid = build_adjacency({Topology::PlaneGrid, 2, 3});
  CHECK(cyl.edges == grid.edges);
  CHECK(cyl.self_loops.empty());
}

TEST_CASE("twisted cylinder m=1 is a path") {
  AdjacencyList g = build_adjacency({Topology::TwistedCylinder, 1, 5});
  CHECK(g.vertex_count == 5);
  CHECK(g.edges.size() == 4);
  for (int k = 0; k + 1 < 5; ++k) CHECK(has_edge(g, k, k + 1));
  CHECK(g.self_loops.empty());
}

TEST_CASE("twisted cylinder helix has no end wrap") {
  // m=2, n=2: helix edges 0-1, 1-2, 2-3 plus verticals 0-2, 1-3; no 3-0.
  AdjacencyList g = build_adjacency({Topology::TwistedCylinder, 2, 2});
  CHECK(g.vertex_count == 4);
  CHECK(g.edges.size() == 5);
  CHECK(!has_edge(g, 0, 3));
}

TEST_CASE("triangle rows carry grid plus one diagonal family") {
  // n=2: vertices (0,0),(1,0),(1,1); edges horizontal, vertical, diagonal.
  AdjacencyList g = build_adjacency(GridInstance::triangle(2));
  CHECK(g.vertex_count == 3);
  CHECK(g.edges.size() == 3);  // a triangle
  CHECK(brute_force_count(GridInstance::triangle(2)) == 4);
}

TEST_CASE("parallelogram diagonal direction is (i,j)-(i+1,j+1)") {
  AdjacencyList g = build_adjacency({Topology::TriParallelogram, 2, 2});
  // ids: (i,j) -> j*2+i; diagonal joins (0,0)=0 and (1,1)=3
  CHECK(has_edge(g, 0, 3));
  CHECK(!has_edge(g, 1, 2));
  CHECK(g.edges.size() == 5);
}

TEST_CASE("brute force examples") {
  CHECK(brute_force_count({Topology::PlaneGrid, 1, 1}) == 2);
  CHECK(brute_force_count({Topology::PlaneGrid, 2, 2}) == 7);
  CHECK(brute_force_count(GridInstance::triangle(3)) == 14);
  CHECK(brute_force_count({Topology::Cylinder, 1, 4}) == 1);
}

TEST_CASE("brute force rejects instances above the vertex cap") {
  CHECK_THROWS_AS(brute_force_count({Topology::PlaneGrid, 8, 8}, 30), CapacityError);
  CHECK_NOTHROW(brute_force_count({Topology::PlaneGrid, 5, 6}, 30));
}

TEST_CASE("monotonicity: added edges never increase the count") {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 4; ++n) {
      ExactCount plane = brute_force_count({Topology::PlaneGrid, m, n});
      CHECK(brute_force_count({Topology::Cylinder, m, n}) <= plane);
      CHECK(brute_force_count({Topology::TwistedCylinder, m, n}) <= plane);
      CHECK(brute_force_count({Topology::TriParallelogram, m, n}) <= plane);
    }
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(GridInstance(Topology::PlaneGrid, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(GridInstance(Topology::TriTriangle, 2, 3), std::invalid_argument);
  CHECK(GridInstance::triangle(4).vertex_count() == 10);
  CHECK(GridInstance(Topology::PlaneGrid, 3, 5).vertex_count() == 15);
}

TEST_CASE("topology tokens round-trip") {
  for (Topology t : kAllTopologies) {
    Topology back;
    REQUIRE(parse_topology(topology_name(t), &back));
    CHECK(back == t);
  }
  Topology t;
  CHECK(!parse_topology("moebius", &t));
}
