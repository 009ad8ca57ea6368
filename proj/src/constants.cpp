#include "hsq/constants.hpp"

#include <algorithm>
#include <cmath>

namespace hsq {

Bracket::Bracket(BigFloat lo, BigFloat hi) : lower(std::move(lo)), upper(std::move(hi)) {
  if (upper < lower) throw std::invalid_argument("Bracket: lower exceeds upper");
  digits_agreed = hsq::digits_agreed(lower, upper);
}

FreeEnergySample free_energy(const GridInstance& inst, const ExactCount& count, int digits) {
  BigFloat log = big_log(count, digits);
  BigFloat area = BigFloat::from_integer(ExactCount(inst.vertex_count()), digits);
  FreeEnergySample s{inst, log, log / area, std::nullopt};
  switch (inst.topology) {
    case Topology::PlaneGrid:
    case Topology::TriParallelogram:
      s.f_minus_opt = log / BigFloat::from_integer(ExactCount(long(inst.m + 1) * (inst.n + 1)),
                                                   digits);
      break;
    case Topology::Cylinder:
    case Topology::TwistedCylinder:
      s.f_minus_opt =
          log / BigFloat::from_integer(ExactCount(long(inst.m + 1) * inst.n), digits);
      break;
    case Topology::TriTriangle:
      break;  // no splicing normalization
  }
  return s;
}

std::pair<BigFloat, BigFloat> two_point_extrapolate(const BigFloat& x1, const BigFloat& y1,
                                                    const BigFloat& x2, const BigFloat& y2) {
  if (x1.cmp(x2) == 0)
    throw std::invalid_argument("two_point_extrapolate: degenerate input, x1 == x2");
  BigFloat slope = (y2 - y1) / (x2 - x1);
  BigFloat intercept = y2 - slope * x2;
  return {std::move(intercept), std::move(slope)};
}

Bracket parity_bracket(const std::map<int, BigFloat>& estimates, int tail) {
  if (estimates.size() < 4)
    throw std::invalid_argument("parity_bracket: need at least 4 consecutive estimates");
  {
    int prev = estimates.begin()->first - 1;
    for (const auto& [n, v] : estimates) {
      if (n != prev + 1)
        throw std::invalid_argument("parity_bracket: estimate indices must be consecutive");
      prev = n;
    }
  }
  const int last = estimates.rbegin()->first;
  const int span = std::max(4, std::min<int>(tail, int(estimates.size())));
  const int first_inspected = last - span + 1;

  // Rounding floor: differences at or below one unit in the last budgeted
  // digit of the largest inspected estimate do not count as violations.
  int budget = estimates.begin()->second.digits();
  BigFloat scale = estimates.rbegin()->second.abs();
  for (auto it = estimates.lower_bound(first_inspected); it != estimates.end(); ++it) {
    budget = std::min(budget, it->second.digits());
    if (scale < it->second.abs()) scale = it->second.abs();
  }
  BigFloat eps = scale.digit_eps(budget);

  for (int parity = 0; parity < 2; ++parity) {
    std::vector<const BigFloat*> cls;
    for (auto it = estimates.lower_bound(first_inspected); it != estimates.end(); ++it)
      if (((it->first % 2) + 2) % 2 == parity) cls.push_back(&it->second);
    int dir = 0;  // +1 nondecreasing, -1 nonincreasing
    for (size_t i = 1; i < cls.size(); ++i) {
      BigFloat d = *cls[i] - *cls[i - 1];
      if (d.abs() <= eps) continue;
      int s = d.sign();
      if (dir == 0)
        dir = s;
      else if (s != dir)
        throw NoBracketError(
            std::string("parity_bracket: ") + (parity ? "odd" : "even") +
            "-indexed estimates are not monotone over the inspected tail (indices " +
            std::to_string(first_inspected) + ".." + std::to_string(last) + ")");
    }
  }

  const BigFloat& a = estimates.at(last);
  const BigFloat& b = estimates.at(last - 1);
  return a < b ? Bracket(a, b) : Bracket(b, a);
}

namespace {

std::vector<BigFloat> column_logs(Engine& engine, Topology topo, int m, int n_max, int digits) {
  std::vector<ExactCount> counts = engine.column_counts(topo, m, n_max);
  std::vector<BigFloat> logs;
  logs.reserve(counts.size());
  for (const auto& c : counts) logs.push_back(big_log(c, digits));
  return logs;
}

// ln(X(m,n+1)/X(m,n)) / divisor, keyed by the lower point n.
std::map<int, BigFloat> ratio_estimates(const std::vector<BigFloat>& logs, int divisor,
                                        int digits) {
  std::map<int, BigFloat> est;
  BigFloat div = BigFloat::ratio(divisor, 1, digits);
  for (size_t n = 1; n < logs.size(); ++n)
    est.emplace(int(n), (logs[n] - logs[n - 1]) / div);
  return est;
}

// Slope of ln X(m,n)/(m n) against 1/n through consecutive points.
std::map<int, BigFloat> slope_estimates(const std::vector<BigFloat>& logs, int m, int digits) {
  std::map<int, BigFloat> est;
  for (size_t n = 1; n < logs.size(); ++n) {
    BigFloat x1 = BigFloat::ratio(1, long(n), digits);
    BigFloat x2 = BigFloat::ratio(1, long(n) + 1, digits);
    BigFloat g1 = logs[n - 1] / BigFloat::ratio(long(m) * long(n), 1, digits);
    BigFloat g2 = logs[n] / BigFloat::ratio(long(m) * (long(n) + 1), 1, digits);
    est.emplace(int(n), two_point_extrapolate(x1, g1, x2, g2).second);
  }
  return est;
}

StripConstants strips_from_logs(Topology topo, int m, const std::vector<BigFloat>& logs,
                                int digits, int tail) {
  StripConstants sc;
  sc.topology = topo;
  sc.m = m;
  sc.f_strip = parity_bracket(ratio_estimates(logs, m, digits), tail);
  sc.k_strip = parity_bracket(slope_estimates(logs, m, digits), tail);
  return sc;
}

}  // namespace

StripConstants strip_constants(Engine& engine, Topology topo, int m, int n_max, int digits,
                               int tail) {
  if (topo == Topology::TriTriangle)
    throw std::invalid_argument("strip_constants: TriTriangle has no strip limit");
  if (n_max < 5) throw std::invalid_argument("strip_constants: n_max too small");
  return strips_from_logs(topo, m, column_logs(engine, topo, m, n_max, digits), digits, tail);
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Plane: return "plane";
    case Family::Triangular: return "triangular";
    case Family::Cylinder: return "cylinder";
    case Family::Twisted: return "twisted";
  }
  return "?";
}

bool parse_family(const std::string& token, Family* out) {
  for (Family f : kAllFamilies)
    if (token == family_name(f)) {
      *out = f;
      return true;
    }
  return false;
}

Topology family_topology(Family f) {
  switch (f) {
    case Family::Plane: return Topology::PlaneGrid;
    case Family::Triangular: return Topology::TriParallelogram;
    case Family::Cylinder: return Topology::Cylinder;
    case Family::Twisted: return Topology::TwistedCylinder;
  }
  throw std::logic_error("bad family");
}

FamilyBudget default_budget(Family f) {
  switch (f) {
    case Family::Plane: return {14, 80};
    case Family::Triangular: return {16, 96};
    case Family::Cylinder: return {24, 64};
    case Family::Twisted: return {30, 88};
  }
  throw std::logic_error("bad family");
}

const ConstantRecord* ConstantReport::find(const std::string& name) const {
  for (const auto& r : records)
    if (r.name == name) return &r;
  return nullptr;
}

ConstantReport estimate_family_constants(Engine& engine, Family family, int m_max, int n_max,
                                         int digits, int tail) {
  if (m_max < kPairGap + 4)
    throw std::invalid_argument("estimate_family_constants: m_max too small for extrapolation");
  const Topology topo = family_topology(family);
  const bool wrapped = family == Family::Cylinder || family == Family::Twisted;

  ConstantReport report;
  report.family = family;
  report.m_max = m_max;
  report.n_max = n_max;
  report.digits = digits;
  report.tail = tail;

  // First level: per-strip constants (and the splice-normalized variant
  // feeding k_minus for the open families).
  std::map<int, BigFloat> fs_mid, ks_mid, fminus_mid;
  std::string strip_error;
  for (int m = 1; m <= m_max && strip_error.empty(); ++m) {
    std::vector<BigFloat> logs = column_logs(engine, topo, m, n_max, digits);
    try {
      StripConstants sc = strips_from_logs(topo, m, logs, digits, tail);
      report.strips.push_back(sc);
      fs_mid.emplace(m, sc.f_strip.mid());
      ks_mid.emplace(m, sc.k_strip.mid());
      if (!wrapped)
        fminus_mid.emplace(
            m, parity_bracket(ratio_estimates(logs, m + 1, digits), tail).mid());
    } catch (const NoBracketError& e) {
      strip_error = "strip m=" + std::to_string(m) + ": " + e.what();
    }
  }

  auto add_record = [&](const std::string& name, auto&& make) {
    ConstantRecord rec;
    rec.name = name;
    if (!strip_error.empty()) {
      rec.error = strip_error;
    } else {
      try {
        rec.bracket = make();
      } catch (const NoBracketError& e) {
        rec.error = e.what();
      }
    }
    report.records.push_back(std::move(rec));
  };

  // Second level: two-point lines through strips spaced kPairGap apart,
  // parity-bracketed over m. x = 1/m (1/(m+1) for the splice variant).
  auto level2 = [&](const std::map<int, BigFloat>& ys, int x_shift) {
    std::map<int, BigFloat> intercepts, slopes;
    for (const auto& [m, y2] : ys) {
      auto it = ys.find(m - kPairGap);
      if (it == ys.end()) continue;
      BigFloat x1 = BigFloat::ratio(1, it->first + x_shift, digits);
      BigFloat x2 = BigFloat::ratio(1, m + x_shift, digits);
      auto [intercept, slope] = two_point_extrapolate(x1, it->second, x2, y2);
      intercepts.emplace(m, std::move(intercept));
      slopes.emplace(m, std::move(slope));
    }
    return std::pair(std::move(intercepts), std::move(slopes));
  };

  std::map<int, BigFloat> f_est, k_est;
  if (strip_error.empty()) std::tie(f_est, k_est) = level2(fs_mid, 0);

  std::optional<Bracket> f_bracket;
  add_record("f", [&] {
    Bracket b = parity_bracket(f_est, tail);
    f_bracket = b;
    return b;
  });
  add_record("e_f", [&]() -> Bracket {
    if (!f_bracket) throw NoBracketError("f bracket unavailable");
    return f_bracket->exp();
  });

  if (!wrapped) {
    std::optional<Bracket> k_bracket;
    add_record("k", [&] {
      Bracket b = parity_bracket(k_est, tail);
      k_bracket = b;
      return b;
    });
    add_record("k_minus", [&] {
      auto [fm_int, fm_slope] = level2(fminus_mid, 1);
      (void)fm_int;
      return parity_bracket(fm_slope, tail);
    });
    add_record("s", [&]() -> Bracket {
      if (!f_bracket || !k_bracket) throw NoBracketError("f or k bracket unavailable");
      return boundary_neutral_offset(*f_bracket, *k_bracket);
    });
    if (family == Family::Triangular) {
      add_record("root", [&] {
        BigFloat r = triangular_polynomial_root(digits);
        return Bracket(r, r);
      });
    }
  } else {
    add_record("k1", [&] { return parity_bracket(k_est, tail); });
    add_record("k2", [&] { return parity_bracket(ks_mid, tail); });
  }
  return report;
}

Bracket boundary_neutral_offset(const Bracket& f, const Bracket& k) {
  if (f.lower.sign() <= 0)
    throw std::domain_error("boundary_neutral_offset: f lower bound must be positive");
  const BigFloat& lo_den = k.lower.sign() >= 0 ? f.upper : f.lower;
  const BigFloat& hi_den = k.upper.sign() >= 0 ? f.lower : f.upper;
  return Bracket(k.lower / lo_den, k.upper / hi_den);
}

namespace {

// Coefficients of the degree-24 polynomial; only even powers appear.
struct PolyTerm {
  int exp;
  const char* coeff;
};

constexpr PolyTerm kPolyTerms[] = {
    {0, "-32751691810479015985152"},
    {4, "97143135277377575190528"},
    {6, "-73347491183630103871488"},
    {8, "-71220809441400405884928"},
    {10, "107155448150443388043264"},
    {12, "-72405670285649161617408"},
    {14, "2958015038376958230528"},
    {16, "7449488310131083100160"},
    {18, "797726698866658379776"},
    {20, "2505062311720673792"},
    {22, "2013290651222784"},
    {24, "25937424601"},
};

int poly_sign_at(const mpz_class& num, const mpz_class& den) {
  // S = sum c_{2j} (num^2)^j (den^2)^(12-j); sign(P(num/den)) = sign(S).
  const mpz_class n2 = num * num, d2 = den * den;
  mpz_class npow = 1;
  std::vector<mpz_class> n2pows(13);
  for (int j = 0; j <= 12; ++j) {
    n2pows[j] = npow;
    npow *= n2;
  }
  mpz_class s = 0, dpow = 1;
  for (int j = 12; j >= 0; --j) {
    for (const auto& t : kPolyTerms) {
      if (t.exp == 2 * j) {
        mpz_class c(t.coeff);
        s += c * n2pows[j] * dpow;
      }
    }
    dpow *= d2;
  }
  return sgn(s);
}

}  // namespace

int triangular_polynomial_sign(long num, long den) {
  if (den <= 0) throw std::invalid_argument("triangular_polynomial_sign: den must be positive");
  return poly_sign_at(mpz_class(num), mpz_class(den));
}

BigFloat triangular_polynomial_root(int digits) {
  if (digits < 1) throw std::invalid_argument("triangular_polynomial_root: digits must be >= 1");
  // Bracket [21/16, 24/16] = [1.3125, 1.5]; the single real root is inside.
  mpz_class lo = 21, hi = 24;
  long k = 4;
  if (poly_sign_at(lo, mpz_class(1) << k) >= 0 || poly_sign_at(hi, mpz_class(1) << k) <= 0)
    throw std::logic_error("triangular_polynomial_root: bad initial bracket");
  const long iters = long(std::ceil((digits + 6) * 3.3219280948873626)) + 2;
  for (long i = 0; i < iters; ++i) {
    lo <<= 1;
    hi <<= 1;
    ++k;
    mpz_class mid = (lo + hi) / 2;
    int s = poly_sign_at(mid, mpz_class(1) << k);
    if (s == 0) {
      lo = hi = mid;
      break;
    }
    (s < 0 ? lo : hi) = mid;
  }
  return BigFloat::from_scaled(lo + hi, -(k + 1), digits);
}

}  // namespace hsq
