#include "hsq/state_space.hpp"

#include <array>
#include <stdexcept>

#include "hsq/errors.hpp"

namespace hsq {

namespace {

constexpr int kMaxFib = 93;

std::array<uint64_t, kMaxFib> make_fib() {
  std::array<uint64_t, kMaxFib> f{};
  f[0] = 0;
  f[1] = 1;
  for (int i = 2; i < kMaxFib; ++i) f[i] = f[i - 1] + f[i - 2];
  return f;
}

const std::array<uint64_t, kMaxFib>& fib_table() {
  static const std::array<uint64_t, kMaxFib> t = make_fib();
  return t;
}

}  // namespace

uint64_t fib(int k) {
  if (k < 0 || k >= kMaxFib) throw std::out_of_range("fib: index out of range");
  return fib_table()[k];
}

uint64_t lucas(int k) {
  if (k < 1 || k + 1 >= kMaxFib) throw std::out_of_range("lucas: index out of range");
  return fib(k - 1) + fib(k + 1);  // L(k) = F(k-1) + F(k+1), F(0) = 0
}

uint64_t path_state_count(int width) { return fib(width + 2); }

uint64_t cyclic_state_count(int width) { return lucas(width); }

StateSpace enumerate_row_states(int width, bool cyclic, uint64_t max_states) {
  if (width < 1 || width > 62) throw std::invalid_argument("enumerate_row_states: bad width");
  uint64_t expected = cyclic ? cyclic_state_count(width) : path_state_count(width);
  if (expected > max_states)
    throw CapacityError("state space of width " + std::to_string(width) + " needs " +
                        std::to_string(expected) + " states, cap is " +
                        std::to_string(max_states));
  StateSpace sp;
  sp.width = width;
  sp.cyclic = cyclic;
  sp.states.reserve(expected);

  // Descend bit width-1 .. 0, zero branch first: emits in ascending order.
  struct Gen {
    int width;
    bool cyclic;
    std::vector<uint64_t>* out;
    void rec(int bit, uint64_t acc, bool prev_set, bool top_set) {
      if (bit < 0) {
        out->push_back(acc);
        return;
      }
      rec(bit - 1, acc, false, top_set);
      bool wrap_block = cyclic && bit == 0 && (top_set || width == 1);
      if (!prev_set && !wrap_block) {
        bool now_top = top_set || (bit == width - 1);
        rec(bit - 1, acc | (uint64_t(1) << bit), true, now_top);
      }
    }
  };
  Gen g{width, cyclic, &sp.states};
  g.rec(width - 1, 0, false, false);

  if (sp.states.size() != expected)
    throw std::logic_error("enumerate_row_states: size mismatch");
  return sp;
}

uint64_t path_rank(uint64_t mask) {
  const auto& f = fib_table();
  uint64_t r = 0;
  while (mask) {
    int b = __builtin_ctzll(mask);
    r += f[b + 2];
    mask &= mask - 1;
  }
  return r;
}

}  // namespace hsq
