#pragma once

#include <cstdint>
#include <vector>

#include "hsq/topology.hpp"

namespace hsq {

bool is_prime_u64(uint64_t n);

// Fixed deterministic channel moduli: primes descending from 2^62 - 1.
// The list is extended on demand and cached for the process lifetime.
std::vector<uint64_t> prime_list(size_t count);

// Smallest prefix of the fixed prime list whose product exceeds
// 2^vertexCount, the a-priori bound on any count.
std::vector<uint64_t> required_prime_budget(const GridInstance& inst);

// Residues of one count across independent prime channels, certified
// against the 2^bound_bits bound of the instance they describe.
struct ResidueSet {
  std::vector<uint64_t> primes;
  std::vector<uint64_t> residues;
  long bound_bits = 0;

  // Validates: primes distinct and < 2^63, residues in range,
  // product of primes > 2^bound_bits.
  ResidueSet(std::vector<uint64_t> primes, std::vector<uint64_t> residues, long bound_bits);
};

// The unique nonnegative integer below the prime product congruent to
// every residue.
ExactCount crt_reconstruct(const ResidueSet& rs);

inline uint64_t add_mod(uint64_t a, uint64_t b, uint64_t p) {
  uint64_t s = a + b;
  return s >= p ? s - p : s;
}

}  // namespace hsq
