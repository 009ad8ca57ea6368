#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>

#include "hsq/topology.hpp"

namespace hsq {

// Append-only count store, one record per line:
//   topology<TAB>m<TAB>n<TAB>count-decimal
// Lines are order-independent; duplicates must agree; '#' lines are
// metadata comments. Verified on read, never recomputed. Single writer,
// any number of readers.
class CountCache {
 public:
  CountCache() = default;

  // Loads an existing file (rejecting malformed or self-contradicting
  // content) and arranges for new records to be appended to it.
  explicit CountCache(const std::string& path);

  std::optional<ExactCount> lookup(const GridInstance& inst) const;

  // Records a computed count. A differing stored value for the same
  // instance is a fatal integrity error.
  void store(const GridInstance& inst, const ExactCount& count);

  size_t size() const;

 private:
  using Key = std::tuple<Topology, int, int>;
  static Key key_of(const GridInstance& inst);

  mutable std::mutex mu_;
  std::map<Key, ExactCount> entries_;
  std::string path_;  // empty: in-memory only
};

}  // namespace hsq
