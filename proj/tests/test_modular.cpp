#include <doctest.h>

#include <random>

#include "hsq/modular.hpp"
#include "hsq/transfer.hpp"

using namespace hsq;

TEST_CASE("prime list is prime, descending, below 2^62") {
  auto ps = prime_list(12);
  REQUIRE(ps.size() == 12);
  for (size_t i = 0; i < ps.size(); ++i) {
    CHECK(is_prime_u64(ps[i]));
    CHECK(ps[i] < (uint64_t(1) << 62));
    if (i) CHECK(ps[i] < ps[i - 1]);
  }
}

TEST_CASE("required prime budget matches the 2^V bound") {
  CHECK(required_prime_budget({Topology::PlaneGrid, 4, 4}).size() == 1);
  CHECK(required_prime_budget({Topology::PlaneGrid, 1, 1}).size() == 1);
  CHECK(required_prime_budget({Topology::PlaneGrid, 20, 20}).size() == 7);
  // budget certifies: product must exceed 2^V
  GridInstance big(Topology::PlaneGrid, 20, 20);
  auto ps = required_prime_budget(big);
  mpz_class prod = 1;
  for (uint64_t p : ps) prod *= mpz_class(static_cast<unsigned long>(p));
  mpz_class bound = 1;
  bound <<= big.vertex_count();
  CHECK(prod > bound);
}

TEST_CASE("crt arithmetic") {
  CHECK(crt_reconstruct(ResidueSet({3, 5}, {2, 3}, 2)) == 8);
  CHECK(crt_reconstruct(ResidueSet({7}, {0}, 1)) == 0);
}

TEST_CASE("residue set validation") {
  CHECK_THROWS_AS(ResidueSet({4, 5}, {1, 1}, 2), std::invalid_argument);   // 4 not prime
  CHECK_THROWS_AS(ResidueSet({5, 5}, {1, 1}, 2), std::invalid_argument);   // duplicate
  CHECK_THROWS_AS(ResidueSet({5}, {5}, 1), std::invalid_argument);         // residue range
  CHECK_THROWS_AS(ResidueSet({3, 5}, {1, 1}, 20), std::invalid_argument);  // bound
}

TEST_CASE("count_modular examples") {
  Engine engine;
  GridInstance g22(Topology::PlaneGrid, 2, 2);
  ResidueSet rs = engine.count_modular(g22, {5});
  CHECK(rs.residues[0] == 2);  // 7 mod 5
  ResidueSet rs2 = engine.count_modular({Topology::PlaneGrid, 1, 1}, {7});
  CHECK(rs2.residues[0] == 2);
  ResidueSet rs3 = engine.count_modular(GridInstance::triangle(6), {101});
  CHECK(rs3.residues[0] == 3318 % 101);
}

TEST_CASE("crt round-trips the engine on 50 random instances") {
  Engine engine;
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 50; ++trial) {
    Topology topo = kAllTopologies[rng() % 5];
    int m = 1 + int(rng() % 6);
    int n = 1 + int(rng() % 8);
    GridInstance inst = topo == Topology::TriTriangle ? GridInstance::triangle(1 + int(rng() % 7))
                                                      : GridInstance(topo, m, n);
    ExactCount direct = engine.count(inst);
    ResidueSet rs = engine.count_modular(inst, required_prime_budget(inst));
    CHECK(crt_reconstruct(rs) == direct);
  }
}
