#include "hsq/modular.hpp"

#include <mutex>
#include <stdexcept>

namespace hsq {

namespace {

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t p) {
  return uint64_t((__uint128_t)a * b % p);
}

uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<uint64_t> prime_list(size_t count) {
  static std::vector<uint64_t> pool;
  static uint64_t next_candidate = (uint64_t(1) << 62) - 1;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (pool.size() < count) {
    while (!is_prime_u64(next_candidate)) next_candidate -= 2;
    pool.push_back(next_candidate);
    next_candidate -= 2;
  }
  return std::vector<uint64_t>(pool.begin(), pool.begin() + count);
}

std::vector<uint64_t> required_prime_budget(const GridInstance& inst) {
  const long bits = inst.vertex_count();
  mpz_class bound = 1;
  bound <<= bits;
  mpz_class product = 1;
  size_t k = 0;
  while (product <= bound) {
    k += 8;
    auto primes = prime_list(k);
    product = 1;
    size_t used = 0;
    for (uint64_t p : primes) {
      product *= mpz_class(static_cast<unsigned long>(p));
      ++used;
      if (product > bound) return std::vector<uint64_t>(primes.begin(), primes.begin() + used);
    }
  }
  return {};
}

ResidueSet::ResidueSet(std::vector<uint64_t> primes_, std::vector<uint64_t> residues_,
                       long bound_bits_)
    : primes(std::move(primes_)), residues(std::move(residues_)), bound_bits(bound_bits_) {
  if (primes.size() != residues.size() || primes.empty())
    throw std::invalid_argument("ResidueSet: primes/residues size mismatch");
  mpz_class product = 1;
  for (size_t i = 0; i < primes.size(); ++i) {
    if (primes[i] >= (uint64_t(1) << 63) || !is_prime_u64(primes[i]))
      throw std::invalid_argument("ResidueSet: modulus is not a prime below 2^63");
    if (residues[i] >= primes[i]) throw std::invalid_argument("ResidueSet: residue out of range");
    for (size_t j = i + 1; j < primes.size(); ++j)
      if (primes[i] == primes[j]) throw std::invalid_argument("ResidueSet: duplicate prime");
    product *= mpz_class(static_cast<unsigned long>(primes[i]));
  }
  mpz_class bound = 1;
  bound <<= bound_bits;
  if (product <= bound)
    throw std::invalid_argument("ResidueSet: prime product does not exceed the count bound");
}

ExactCount crt_reconstruct(const ResidueSet& rs) {
  mpz_class x = 0, modulus = 1;
  for (size_t i = 0; i < rs.primes.size(); ++i) {
    mpz_class p(static_cast<unsigned long>(rs.primes[i]));
    mpz_class r(static_cast<unsigned long>(rs.residues[i]));
    if (i == 0) {
      x = r;
      modulus = p;
      continue;
    }
    // x' = x + M * t with t = (r - x) / M (mod p)
    mpz_class minv;
    if (mpz_invert(minv.get_mpz_t(), mpz_class(modulus % p).get_mpz_t(), p.get_mpz_t()) == 0)
      throw std::logic_error("crt_reconstruct: moduli not coprime");
    mpz_class t = ((r - x % p) % p + p) % p;
    t = t * minv % p;
    x += modulus * t;
    modulus *= p;
  }
  return x;
}

}  // namespace hsq
