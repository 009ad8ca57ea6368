#pragma once

#include <cstdint>
#include <vector>

namespace hsq {

// Fibonacci with F(1) = F(2) = 1. Valid for k <= 92.
uint64_t fib(int k);
// Lucas with L(1) = 1, L(2) = 3.
uint64_t lucas(int k);

// |{masks of `width` bits, no two adjacent set}| = F(width + 2).
uint64_t path_state_count(int width);
// Additionally bits 0 and width-1 not both set; equals L(width).
uint64_t cyclic_state_count(int width);

// The compressed set of valid row masks driving contraction.
// states are sorted ascending; that ordering is the determinism contract
// and the basis of rank arithmetic throughout the engine.
struct StateSpace {
  int width = 0;
  bool cyclic = false;
  std::vector<uint64_t> states;
};

inline constexpr uint64_t kDefaultStateCap = uint64_t(1) << 26;

StateSpace enumerate_row_states(int width, bool cyclic, uint64_t max_states = kDefaultStateCap);

// Position of a valid path mask within the sorted width-w list:
// rank(s) = sum over set bits b of F(b + 2). Width-independent.
uint64_t path_rank(uint64_t mask);

inline bool mask_is_path_valid(uint64_t mask) { return (mask & (mask >> 1)) == 0; }
inline bool mask_is_cyclic_valid(uint64_t mask, int width) {
  return mask_is_path_valid(mask) && !((mask & 1) && ((mask >> (width - 1)) & 1));
}

}  // namespace hsq
