#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hsq/cache.hpp"
#include "hsq/modular.hpp"
#include "hsq/state_space.hpp"
#include "hsq/topology.hpp"

namespace hsq {

enum class Backend { Bigint, Crt };

const char* backend_name(Backend b);
bool parse_backend(const std::string& token, Backend* out);

struct EngineConfig {
  uint64_t max_states = kDefaultStateCap;        // per dense state vector
  uint64_t max_pair_table = uint64_t(1) << 25;   // row-transition list entries
};

// Exact counts for all five families by compressed row-state (or helix
// window) contraction. Arithmetic runs either on arbitrary-precision
// integers or on independent prime channels recombined by CRT; both give
// identical values. Row updates are OpenMP-parallel over target states;
// results are independent of thread count.
class Engine {
 public:
  explicit Engine(EngineConfig cfg = {}, CountCache* cache = nullptr);
  ~Engine();

  ExactCount count(const GridInstance& inst, Backend backend = Backend::Bigint);

  // Counts for n = 1..n_max in one contraction pass (m ignored for
  // TriTriangle). Fills the cache with every prefix.
  std::vector<ExactCount> column_counts(Topology topo, int m, int n_max,
                                        Backend backend = Backend::Bigint);

  // Same recurrences with all arithmetic reduced modulo each prime.
  ResidueSet count_modular(const GridInstance& inst, const std::vector<uint64_t>& primes);

  const EngineConfig& config() const { return cfg_; }

 private:
  struct Plans;
  std::vector<ExactCount> bigint_column(Topology topo, int m, int n_max);
  std::vector<uint64_t> mod_column(Topology topo, int m, int n_max, uint64_t prime);

  EngineConfig cfg_;
  CountCache* cache_;  // optional, not owned
  std::unique_ptr<Plans> plans_;
};

}  // namespace hsq
