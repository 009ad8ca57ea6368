#include "hsq/cache.hpp"

#include <fstream>
#include <sstream>

#include "hsq/errors.hpp"

namespace hsq {

namespace {

const char* kMetaHeader =
    "# hardsq count cache; channel moduli are the fixed prime list descending from 2^62";

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = line.find('\t', start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

}  // namespace

CountCache::Key CountCache::key_of(const GridInstance& inst) {
  return {inst.topology, inst.m, inst.n};
}

CountCache::CountCache(const std::string& path) : path_(path) {
  std::ifstream in(path);
  if (!in.is_open()) return;  // fresh cache; file created on first store
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_tabs(line);
    if (fields.size() != 4)
      throw IntegrityError("cache " + path + ":" + std::to_string(lineno) +
                           ": expected 4 tab-separated fields");
    Topology topo;
    if (!parse_topology(fields[0], &topo))
      throw IntegrityError("cache " + path + ":" + std::to_string(lineno) +
                           ": unknown topology '" + fields[0] + "'");
    int m, n;
    try {
      size_t used;
      m = std::stoi(fields[1], &used);
      if (used != fields[1].size()) throw std::invalid_argument("");
      n = std::stoi(fields[2], &used);
      if (used != fields[2].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw IntegrityError("cache " + path + ":" + std::to_string(lineno) + ": bad dimensions");
    }
    if (m < 1 || n < 1 || (topo == Topology::TriTriangle && m != n))
      throw IntegrityError("cache " + path + ":" + std::to_string(lineno) + ": bad dimensions");
    ExactCount value;
    if (fields[3].empty() || mpz_set_str(value.get_mpz_t(), fields[3].c_str(), 10) != 0 ||
        value < 1)
      throw IntegrityError("cache " + path + ":" + std::to_string(lineno) + ": bad count");
    Key k{topo, m, n};
    auto it = entries_.find(k);
    if (it != entries_.end()) {
      if (it->second != value)
        throw IntegrityError("cache " + path + ":" + std::to_string(lineno) +
                             ": duplicate record disagrees with an earlier line");
    } else {
      entries_.emplace(k, std::move(value));
    }
  }
}

std::optional<ExactCount> CountCache::lookup(const GridInstance& inst) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = entries_.find(key_of(inst));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void CountCache::store(const GridInstance& inst, const ExactCount& count) {
  std::lock_guard<std::mutex> lock(mu_);
  Key k = key_of(inst);
  auto it = entries_.find(k);
  if (it != entries_.end()) {
    if (it->second != count)
      throw IntegrityError("cache: computed count for " + inst.str() +
                           " contradicts the stored record");
    return;
  }
  entries_.emplace(k, count);
  if (path_.empty()) return;
  bool fresh = false;
  {
    std::ifstream probe(path_);
    fresh = !probe.is_open() || probe.peek() == std::ifstream::traits_type::eof();
  }
  std::ofstream out(path_, std::ios::app);
  if (!out.is_open()) throw IntegrityError("cache: cannot open " + path_ + " for append");
  if (fresh) out << kMetaHeader << "\n";
  out << topology_name(inst.topology) << '\t' << inst.m << '\t' << inst.n << '\t'
      << count.get_str() << "\n";
  out.flush();
}

size_t CountCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

}  // namespace hsq
