#include "hsq/transfer.hpp"

#include <gmp.h>
#include <omp.h>

#include <algorithm>
#include <cstring>
#include <stdexcept>

#include "hsq/errors.hpp"

namespace hsq {

const char* backend_name(Backend b) { return b == Backend::Bigint ? "bigint" : "crt"; }

bool parse_backend(const std::string& token, Backend* out) {
  if (token == "bigint") {
    *out = Backend::Bigint;
    return true;
  }
  if (token == "crt") {
    *out = Backend::Crt;
    return true;
  }
  return false;
}

namespace {

constexpr uint32_t kNone = UINT32_MAX;

const uint64_t* fib_data() {
  static const uint64_t* data = [] {
    static uint64_t t[93];
    for (int i = 0; i < 93; ++i) t[i] = fib(i);
    return t;
  }();
  return data;
}

// Visit every mask s with no two adjacent bits, s subset of `allowed`,
// in ascending numeric order; f receives the Fibonacci rank of s.
template <class F>
void visit_valid_subsets(uint64_t allowed, uint64_t rank_base, const uint64_t* fibt, F&& f) {
  if (allowed == 0) {
    f(rank_base);
    return;
  }
  int h = 63 - __builtin_clzll(allowed);
  visit_valid_subsets(allowed & ~(uint64_t(1) << h), rank_base, fibt, f);
  uint64_t below = h >= 1 ? (allowed & ((uint64_t(1) << (h - 1)) - 1)) : 0;
  visit_valid_subsets(below, rank_base + fibt[h + 2], fibt, f);
}

uint64_t count_valid_subsets(uint64_t allowed, int width) {
  uint64_t c0 = 1, c1 = 0;
  for (int b = 0; b < width; ++b) {
    uint64_t n1 = ((allowed >> b) & 1) ? c0 : 0;
    c0 += c1;
    c1 = n1;
  }
  return c0 + c1;
}

// Exact number of compatible row pairs at width m (= the two-row count of
// the family), by a four-state column recurrence.
uint64_t row_pair_count(int m, bool diag) {
  uint64_t dp[4] = {1, 0, 0, 0};
  for (int i = 0; i < m; ++i) {
    uint64_t nd[4] = {0, 0, 0, 0};
    for (int st = 0; st < 4; ++st) {
      if (!dp[st]) continue;
      int sp = st & 1, tp = st >> 1;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          if ((a && sp) || (b && tp) || (a && b)) continue;
          if (diag && sp && b) continue;  // s_i occupied blocks t_{i+1}
          nd[a | (b << 1)] += dp[st];
        }
    }
    std::copy(nd, nd + 4, dp);
  }
  return dp[0] + dp[1] + dp[2] + dp[3];
}

// ---------------------------------------------------------------------------
// Transition plans, built once per (width, topology) and reused across rows.

struct RowPlan {
  int m = 0;
  bool diag = false;
  std::vector<uint64_t> states;  // targets, ascending
  bool use_csr = false;
  std::vector<uint64_t> offsets;  // size S+1
  std::vector<uint32_t> srcs;     // source ranks grouped by target
};

RowPlan build_row_plan(int m, bool diag, const EngineConfig& cfg) {
  RowPlan plan;
  plan.m = m;
  plan.diag = diag;
  plan.states = enumerate_row_states(m, false, cfg.max_states).states;
  const uint64_t S = plan.states.size();
  const uint64_t srcmask = (uint64_t(1) << m) - 1;
  const uint64_t pairs = row_pair_count(m, diag);
  if (pairs > cfg.max_pair_table) return plan;  // per-row enumeration mode

  plan.use_csr = true;
  plan.offsets.assign(S + 1, 0);
#pragma omp parallel for schedule(static)
  for (long long t = 0; t < (long long)S; ++t) {
    uint64_t allowed = ~(plan.states[t] | (diag ? plan.states[t] >> 1 : 0)) & srcmask;
    plan.offsets[t + 1] = count_valid_subsets(allowed, m);
  }
  for (uint64_t t = 0; t < S; ++t) plan.offsets[t + 1] += plan.offsets[t];
  if (plan.offsets[S] != pairs) throw std::logic_error("row plan: pair count mismatch");
  plan.srcs.resize(pairs);
  const uint64_t* fibt = fib_data();
#pragma omp parallel for schedule(dynamic, 256)
  for (long long t = 0; t < (long long)S; ++t) {
    uint64_t allowed = ~(plan.states[t] | (diag ? plan.states[t] >> 1 : 0)) & srcmask;
    uint64_t k = plan.offsets[t];
    visit_valid_subsets(allowed, 0, fibt, [&](uint64_t r) { plan.srcs[k++] = uint32_t(r); });
  }
  return plan;
}

// Cylinder rows are contracted site by site; the mixed state is a pair
// (placed prefix of the new row, remaining suffix of the old row), indexed
// as prefix-rank * |suffix space| + suffix-rank. The wrap constraint reads
// the new row's bit 0 straight off the prefix.
struct CylStep {
  uint64_t size = 0;
  std::vector<uint32_t> src0, src1;
};

struct CylPlan {
  int m = 0;
  std::vector<uint64_t> states;  // path-valid row masks, width m
  std::vector<uint8_t> cyclic_ok;
  std::vector<CylStep> steps;
  uint64_t max_space = 0;
};

CylPlan build_cyl_plan(int m, const EngineConfig& cfg) {
  CylPlan plan;
  plan.m = m;
  plan.states = enumerate_row_states(m, false, cfg.max_states).states;
  const uint64_t S = plan.states.size();
  plan.cyclic_ok.resize(S);
  for (uint64_t r = 0; r < S; ++r)
    plan.cyclic_ok[r] = mask_is_cyclic_valid(plan.states[r], m) ? 1 : 0;
  plan.max_space = S;
  plan.steps.resize(m);

  for (int i = 0; i < m; ++i) {
    const int suf_w = m - i - 1;
    std::vector<uint64_t> prefixes = enumerate_row_states(i + 1, false, cfg.max_states).states;
    std::vector<uint64_t> suffixes =
        suf_w >= 1 ? enumerate_row_states(suf_w, false, cfg.max_states).states
                   : std::vector<uint64_t>{0};
    const uint64_t vsz = suffixes.size();              // F(suf_w + 2)
    const uint64_t src_vsz = fib(m - i + 2);           // |suffix space one step earlier|
    CylStep& st = plan.steps[i];
    st.size = prefixes.size() * vsz;
    if (st.size > cfg.max_states || st.size >= kNone)
      throw CapacityError("cylinder width " + std::to_string(m) + " needs " +
                          std::to_string(st.size) + " mixed states, cap is " +
                          std::to_string(cfg.max_states));
    plan.max_space = std::max(plan.max_space, st.size);
    st.src0.assign(st.size, kNone);
    st.src1.assign(st.size, kNone);

    std::vector<uint64_t> rv2(vsz);  // rank of (v' << 1) in the source suffix space
    for (uint64_t rv = 0; rv < vsz; ++rv) rv2[rv] = path_rank(suffixes[rv] << 1);

#pragma omp parallel for schedule(static)
    for (long long rp = 0; rp < (long long)prefixes.size(); ++rp) {
      const uint64_t p = prefixes[rp];
      const bool b = (p >> i) & 1;
      const uint64_t rp0 = uint64_t(rp) - (b ? fib(i + 2) : 0);
      const bool wrap_blocked = b && i == m - 1 && (p & 1);
      for (uint64_t rv = 0; rv < vsz; ++rv) {
        const uint64_t d = uint64_t(rp) * vsz + rv;
        if (wrap_blocked) continue;  // sources stay kNone; slot is written as zero
        const uint64_t base = rp0 * src_vsz + rv2[rv];
        st.src0[d] = uint32_t(base);
        if (!b && (suf_w == 0 || !(suffixes[rv] & 1))) st.src1[d] = uint32_t(base + 1);
      }
    }
  }
  return plan;
}

// Twisted-cylinder scan state: occupancy window of the last m sites.
// Window masks are path-valid; sources of window y are (y>>1) and
// (y>>1)|2^(m-1), whose ranks differ by F(m+1).
struct HelixPlan {
  int m = 0;
  uint64_t size = 0;
  uint64_t boundary = 0;  // F(m+1): ranks below it have bit m-1 clear
  std::vector<uint32_t> src_low;
  std::vector<uint8_t> newest_bit;
};

HelixPlan build_helix_plan(int m, const EngineConfig& cfg) {
  HelixPlan plan;
  plan.m = m;
  std::vector<uint64_t> states = enumerate_row_states(m, false, cfg.max_states).states;
  plan.size = states.size();
  plan.boundary = fib(m + 1);
  plan.src_low.resize(plan.size);
  plan.newest_bit.resize(plan.size);
#pragma omp parallel for schedule(static)
  for (long long r = 0; r < (long long)plan.size; ++r) {
    plan.src_low[r] = uint32_t(path_rank(states[r] >> 1));
    plan.newest_bit[r] = uint8_t(states[r] & 1);
  }
  return plan;
}

// ---------------------------------------------------------------------------
// Arithmetic policies. Kernels are written once and instantiated for
// arbitrary-precision integers (flat limb arenas, mpn arithmetic) and for
// single-prime channels (uint64).

struct BigPolicy {
  using Total = mpz_class;

  struct Vec {
    std::vector<mp_limb_t> buf;
    size_t n = 0;
    int stride = 0;
    mp_limb_t* at(size_t i) { return buf.data() + i * size_t(stride); }
    const mp_limb_t* at(size_t i) const { return buf.data() + i * size_t(stride); }
  };

  int initial_stride(int m) const { return int((m + 100) / 64) + 2; }

  void init(Vec& v, size_t n, int stride) const {
    v.n = n;
    v.stride = stride;
    v.buf.assign(n * size_t(stride), 0);
  }
  void resize_slots(Vec& v, size_t n) const {
    v.n = n;
    if (v.buf.size() < n * size_t(v.stride)) v.buf.resize(n * size_t(v.stride));
  }
  void ensure_value_bits(Vec& a, Vec& b, long bits) const {
    int need = int(bits / 64) + 2;
    if (need <= a.stride) return;
    grow(a, need + 2);
    grow(b, need + 2);
  }
  static void grow(Vec& v, int stride) {
    std::vector<mp_limb_t> nb(std::max(v.n, v.buf.size() / std::max(v.stride, 1)) * size_t(stride),
                              0);
    size_t slots = v.buf.size() / std::max(v.stride, 1);
    for (size_t i = 0; i < slots; ++i)
      std::memcpy(nb.data() + i * stride, v.buf.data() + i * v.stride,
                  sizeof(mp_limb_t) * v.stride);
    v.buf = std::move(nb);
    v.stride = stride;
  }

  void set_zero(Vec& v, size_t i) const { mpn_zero(v.at(i), v.stride); }
  void set_one(Vec& v, size_t i) const {
    mpn_zero(v.at(i), v.stride);
    v.at(i)[0] = 1;
  }
  void add_into(Vec& d, size_t di, const Vec& s, size_t si) const {
    if (mpn_add_n(d.at(di), d.at(di), s.at(si), d.stride))
      throw std::logic_error("limb arena overflow");
  }
  void write_copy(Vec& d, size_t di, const Vec& s, size_t si) const {
    mpn_copyi(d.at(di), s.at(si), d.stride);
  }
  void write_sum2(Vec& d, size_t di, const Vec& s, size_t s0, size_t s1) const {
    if (mpn_add_n(d.at(di), s.at(s0), s.at(s1), d.stride))
      throw std::logic_error("limb arena overflow");
  }

  Total total(const Vec& v) const {
    std::vector<mp_limb_t> acc(v.stride + 1, 0);
    for (size_t i = 0; i < v.n; ++i)
      if (mpn_add(acc.data(), acc.data(), v.stride + 1, v.at(i), v.stride))
        throw std::logic_error("limb arena overflow");
    Total t;
    mpz_import(t.get_mpz_t(), acc.size(), -1, sizeof(mp_limb_t), 0, 0, acc.data());
    return t;
  }
  long total_bits(const Total& t) const {
    return t == 0 ? 1 : long(mpz_sizeinbase(t.get_mpz_t(), 2));
  }
};

struct ModPolicy {
  uint64_t p;
  using Total = uint64_t;

  struct Vec {
    std::vector<uint64_t> buf;
    size_t n = 0;
    int stride = 1;
    uint64_t* at(size_t i) { return &buf[i]; }
  };

  int initial_stride(int) const { return 1; }
  void init(Vec& v, size_t n, int) const {
    v.n = n;
    v.buf.assign(n, 0);
  }
  void resize_slots(Vec& v, size_t n) const {
    v.n = n;
    if (v.buf.size() < n) v.buf.resize(n);
  }
  void ensure_value_bits(Vec&, Vec&, long) const {}

  void set_zero(Vec& v, size_t i) const { v.buf[i] = 0; }
  void set_one(Vec& v, size_t i) const { v.buf[i] = 1 % p; }
  void add_into(Vec& d, size_t di, const Vec& s, size_t si) const {
    d.buf[di] = add_mod(d.buf[di], s.buf[si], p);
  }
  void write_copy(Vec& d, size_t di, const Vec& s, size_t si) const { d.buf[di] = s.buf[si]; }
  void write_sum2(Vec& d, size_t di, const Vec& s, size_t s0, size_t s1) const {
    d.buf[di] = add_mod(s.buf[s0], s.buf[s1], p);
  }

  Total total(const Vec& v) const {
    uint64_t acc = 0;
    for (size_t i = 0; i < v.n; ++i) acc = add_mod(acc, v.buf[i], p);
    return acc;
  }
  long total_bits(const Total&) const { return 1; }
};

// ---------------------------------------------------------------------------
// Family sweeps: counts for n = 1..n_max in one contraction pass.

template <class P>
std::vector<typename P::Total> sweep_row_family(P& pol, const RowPlan& plan, int n_max) {
  const uint64_t S = plan.states.size();
  const int m = plan.m;
  const uint64_t srcmask = (uint64_t(1) << m) - 1;
  const uint64_t* fibt = fib_data();

  typename P::Vec cur, nxt;
  pol.init(cur, S, pol.initial_stride(m));
  pol.init(nxt, S, cur.stride);
  for (uint64_t i = 0; i < S; ++i) pol.set_one(cur, i);

  std::vector<typename P::Total> totals;
  totals.reserve(n_max);
  totals.push_back(pol.total(cur));
  for (int row = 2; row <= n_max; ++row) {
    pol.ensure_value_bits(cur, nxt, pol.total_bits(totals.back()) + m + 2);
    if (plan.use_csr) {
#pragma omp parallel for schedule(static)
      for (long long t = 0; t < (long long)S; ++t) {
        pol.set_zero(nxt, t);
        for (uint64_t k = plan.offsets[t]; k < plan.offsets[t + 1]; ++k)
          pol.add_into(nxt, t, cur, plan.srcs[k]);
      }
    } else {
#pragma omp parallel for schedule(dynamic, 64)
      for (long long t = 0; t < (long long)S; ++t) {
        pol.set_zero(nxt, t);
        uint64_t allowed = ~(plan.states[t] | (plan.diag ? plan.states[t] >> 1 : 0)) & srcmask;
        visit_valid_subsets(allowed, 0, fibt,
                            [&](uint64_t r) { pol.add_into(nxt, t, cur, r); });
      }
    }
    std::swap(cur, nxt);
    totals.push_back(pol.total(cur));
  }
  return totals;
}

// Triangle rows are processed from the apex outward: after row w the running
// vector describes exactly the width-w triangle, so one pass yields every
// count up to n_max.
template <class P>
std::vector<typename P::Total> sweep_triangle(P& pol, int n_max, const EngineConfig& cfg) {
  if (path_state_count(n_max) > cfg.max_states)
    throw CapacityError("triangle width " + std::to_string(n_max) + " needs " +
                        std::to_string(path_state_count(n_max)) + " states, cap is " +
                        std::to_string(cfg.max_states));
  const uint64_t* fibt = fib_data();

  typename P::Vec cur, nxt;
  pol.init(cur, 2, pol.initial_stride(n_max));
  pol.init(nxt, 2, cur.stride);
  pol.set_one(cur, 0);
  pol.set_one(cur, 1);

  std::vector<typename P::Total> totals;
  totals.reserve(n_max);
  totals.push_back(pol.total(cur));
  for (int w = 2; w <= n_max; ++w) {
    auto targets = enumerate_row_states(w, false, cfg.max_states).states;
    const uint64_t S = targets.size();
    const uint64_t srcmask = (uint64_t(1) << (w - 1)) - 1;
    pol.resize_slots(nxt, S);
    pol.ensure_value_bits(cur, nxt, pol.total_bits(totals.back()) + w + 2);
#pragma omp parallel for schedule(dynamic, 64)
    for (long long t = 0; t < (long long)S; ++t) {
      pol.set_zero(nxt, t);
      uint64_t allowed = ~(targets[t] | (targets[t] >> 1)) & srcmask;
      visit_valid_subsets(allowed, 0, fibt, [&](uint64_t r) { pol.add_into(nxt, t, cur, r); });
    }
    std::swap(cur, nxt);
    totals.push_back(pol.total(cur));
  }
  return totals;
}

template <class P>
std::vector<typename P::Total> sweep_cylinder(P& pol, const CylPlan& plan, int n_max) {
  const uint64_t S = plan.states.size();
  const int m = plan.m;

  typename P::Vec cur, nxt;
  pol.init(cur, plan.max_space, pol.initial_stride(m));
  pol.init(nxt, plan.max_space, cur.stride);
  pol.resize_slots(cur, S);
  for (uint64_t i = 0; i < S; ++i)
    plan.cyclic_ok[i] ? pol.set_one(cur, i) : pol.set_zero(cur, i);

  std::vector<typename P::Total> totals;
  totals.reserve(n_max);
  totals.push_back(pol.total(cur));
  for (int row = 2; row <= n_max; ++row) {
    pol.ensure_value_bits(cur, nxt, pol.total_bits(totals.back()) + m + 2);
    for (int i = 0; i < m; ++i) {
      const CylStep& st = plan.steps[i];
      pol.resize_slots(nxt, st.size);
#pragma omp parallel for schedule(static)
      for (long long d = 0; d < (long long)st.size; ++d) {
        uint32_t s0 = st.src0[d];
        if (s0 == kNone)
          pol.set_zero(nxt, d);
        else if (st.src1[d] == kNone)
          pol.write_copy(nxt, d, cur, s0);
        else
          pol.write_sum2(nxt, d, cur, s0, st.src1[d]);
      }
      std::swap(cur, nxt);
    }
    totals.push_back(pol.total(cur));
  }
  return totals;
}

template <class P>
std::vector<typename P::Total> sweep_helix(P& pol, const HelixPlan& plan, int n_max) {
  const uint64_t S = plan.size;
  const int m = plan.m;

  typename P::Vec cur, nxt;
  pol.init(cur, S, pol.initial_stride(m));
  pol.init(nxt, S, cur.stride);
  for (uint64_t i = 0; i < S; ++i) pol.set_zero(cur, i);
  pol.set_one(cur, 0);

  std::vector<typename P::Total> totals;
  totals.reserve(n_max);
  long last_bits = 1;
  for (int row = 1; row <= n_max; ++row) {
    pol.ensure_value_bits(cur, nxt, last_bits + m + 2);
    for (int site = 0; site < m; ++site) {
#pragma omp parallel for schedule(static)
      for (long long r = 0; r < (long long)S; ++r) {
        uint32_t s0 = plan.src_low[r];
        if (plan.newest_bit[r] || uint64_t(r) >= plan.boundary)
          pol.write_copy(nxt, r, cur, s0);
        else
          pol.write_sum2(nxt, r, cur, s0, plan.boundary + s0);
      }
      std::swap(cur, nxt);
    }
    totals.push_back(pol.total(cur));
    last_bits = pol.total_bits(totals.back());
  }
  return totals;
}

}  // namespace

// ---------------------------------------------------------------------------

struct Engine::Plans {
  std::mutex mu;
  std::map<std::pair<int, bool>, std::shared_ptr<const RowPlan>> row;
  std::map<int, std::shared_ptr<const CylPlan>> cyl;
  std::map<int, std::shared_ptr<const HelixPlan>> helix;

  std::shared_ptr<const RowPlan> get_row(int m, bool diag, const EngineConfig& cfg) {
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = row[{m, diag}];
    if (!slot) slot = std::make_shared<RowPlan>(build_row_plan(m, diag, cfg));
    return slot;
  }
  std::shared_ptr<const CylPlan> get_cyl(int m, const EngineConfig& cfg) {
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cyl[m];
    if (!slot) slot = std::make_shared<CylPlan>(build_cyl_plan(m, cfg));
    return slot;
  }
  std::shared_ptr<const HelixPlan> get_helix(int m, const EngineConfig& cfg) {
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = helix[m];
    if (!slot) slot = std::make_shared<HelixPlan>(build_helix_plan(m, cfg));
    return slot;
  }
};

Engine::Engine(EngineConfig cfg, CountCache* cache)
    : cfg_(cfg), cache_(cache), plans_(std::make_unique<Plans>()) {}

Engine::~Engine() = default;

std::vector<ExactCount> Engine::bigint_column(Topology topo, int m, int n_max) {
  BigPolicy pol;
  switch (topo) {
    case Topology::PlaneGrid:
      return sweep_row_family(pol, *plans_->get_row(m, false, cfg_), n_max);
    case Topology::TriParallelogram:
      return sweep_row_family(pol, *plans_->get_row(m, true, cfg_), n_max);
    case Topology::TriTriangle:
      return sweep_triangle(pol, n_max, cfg_);
    case Topology::Cylinder:
      return sweep_cylinder(pol, *plans_->get_cyl(m, cfg_), n_max);
    case Topology::TwistedCylinder:
      return sweep_helix(pol, *plans_->get_helix(m, cfg_), n_max);
  }
  throw std::logic_error("bad topology");
}

std::vector<uint64_t> Engine::mod_column(Topology topo, int m, int n_max, uint64_t prime) {
  ModPolicy pol{prime};
  switch (topo) {
    case Topology::PlaneGrid:
      return sweep_row_family(pol, *plans_->get_row(m, false, cfg_), n_max);
    case Topology::TriParallelogram:
      return sweep_row_family(pol, *plans_->get_row(m, true, cfg_), n_max);
    case Topology::TriTriangle:
      return sweep_triangle(pol, n_max, cfg_);
    case Topology::Cylinder:
      return sweep_cylinder(pol, *plans_->get_cyl(m, cfg_), n_max);
    case Topology::TwistedCylinder:
      return sweep_helix(pol, *plans_->get_helix(m, cfg_), n_max);
  }
  throw std::logic_error("bad topology");
}

namespace {

GridInstance instance_at(Topology topo, int m, int n) {
  if (topo == Topology::TriTriangle) return GridInstance::triangle(n);
  return GridInstance(topo, m, n);
}

}  // namespace

std::vector<ExactCount> Engine::column_counts(Topology topo, int m, int n_max, Backend backend) {
  if (n_max < 1 || m < 1) throw std::invalid_argument("column_counts: bad dimensions");

  if (cache_) {
    std::vector<ExactCount> cached;
    cached.reserve(n_max);
    bool all = true;
    for (int n = 1; n <= n_max && all; ++n) {
      auto hit = cache_->lookup(instance_at(topo, m, n));
      if (hit)
        cached.push_back(std::move(*hit));
      else
        all = false;
    }
    if (all) return cached;
  }

  std::vector<ExactCount> counts;
  if (backend == Backend::Bigint) {
    counts = bigint_column(topo, m, n_max);
  } else {
    const auto primes = required_prime_budget(instance_at(topo, m, n_max));
    std::vector<std::vector<uint64_t>> channels;
    channels.reserve(primes.size());
    for (uint64_t p : primes) channels.push_back(mod_column(topo, m, n_max, p));
    counts.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) {
      std::vector<uint64_t> residues(primes.size());
      for (size_t c = 0; c < primes.size(); ++c) residues[c] = channels[c][n - 1];
      counts.push_back(
          crt_reconstruct(ResidueSet(primes, residues, instance_at(topo, m, n).vertex_count())));
    }
  }
  if (cache_) {
    for (int n = 1; n <= n_max; ++n) cache_->store(instance_at(topo, m, n), counts[n - 1]);
  }
  return counts;
}

ExactCount Engine::count(const GridInstance& inst, Backend backend) {
  if (cache_) {
    auto hit = cache_->lookup(inst);
    if (hit) return *hit;
  }
  return column_counts(inst.topology, inst.m, inst.n, backend).back();
}

ResidueSet Engine::count_modular(const GridInstance& inst, const std::vector<uint64_t>& primes) {
  std::vector<uint64_t> residues;
  residues.reserve(primes.size());
  for (uint64_t p : primes)
    residues.push_back(mod_column(inst.topology, inst.m, inst.n, p).back());
  // The certified bound is the instance's 2^V when the channels cover it;
  // an undersized prime set still yields residues, certifying only what
  // its product supports.
  mpz_class product = 1;
  for (uint64_t p : primes) product *= mpz_class(static_cast<unsigned long>(p));
  long certified = long(mpz_sizeinbase(product.get_mpz_t(), 2)) - 1;
  return ResidueSet(primes, residues, std::min(inst.vertex_count(), certified));
}

}  // namespace hsq
