#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hsq/bigfloat.hpp"
#include "hsq/transfer.hpp"

namespace hsq {

// Parity-tail monotonicity could not be certified; the caller must extend
// the budget.
struct NoBracketError : std::runtime_error {
  explicit NoBracketError(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedNormalization : std::domain_error {
  explicit UnsupportedNormalization(const std::string& what) : std::domain_error(what) {}
};

// A lower/upper enclosure of a constant.
struct Bracket {
  BigFloat lower, upper;
  int digits_agreed = 0;

  Bracket() = default;
  Bracket(BigFloat lo, BigFloat hi);

  BigFloat mid() const { return (lower + upper).half(); }
  BigFloat width() const { return upper - lower; }
  bool contains(const BigFloat& x) const { return lower <= x && x <= upper; }
  Bracket exp() const { return Bracket(lower.exp(), upper.exp()); }
};

struct FreeEnergySample {
  GridInstance instance;
  BigFloat log_count;
  BigFloat f;                          // ln(count) / area, area = m*n (triangle: n(n+1)/2)
  std::optional<BigFloat> f_minus_opt;  // ln(count) / splice area; absent for TriTriangle

  const BigFloat& fminus() const {
    if (!f_minus_opt)
      throw UnsupportedNormalization("f-minus is undefined for " + instance.str());
    return *f_minus_opt;
  }
};

FreeEnergySample free_energy(const GridInstance& inst, const ExactCount& count, int digits);

// Line through (x1,y1), (x2,y2): {value at x = 0, slope}.
std::pair<BigFloat, BigFloat> two_point_extrapolate(const BigFloat& x1, const BigFloat& y1,
                                                    const BigFloat& x2, const BigFloat& y2);

inline constexpr int kDefaultTail = 8;

// Bracket = [min, max] of the last odd-indexed and last even-indexed
// estimate, after checking that each parity class is monotone over the
// inspected tail (ties below the rounding floor allowed). Keys must be
// consecutive integers, at least 4 of them.
Bracket parity_bracket(const std::map<int, BigFloat>& estimates, int tail = kDefaultTail);

struct StripConstants {
  Topology topology = Topology::PlaneGrid;
  int m = 0;
  Bracket f_strip;  // f_X(m, oo)
  Bracket k_strip;  // k_X(m, oo); the vertical coefficient for wrapped families
};

// f_strip from the log-ratio sequence ln(X(m,n+1)/X(m,n))/m, k_strip from
// the two-point slope of ln X(m,n)/(mn) against 1/n, both parity-bracketed
// over n. Not defined for TriTriangle.
StripConstants strip_constants(Engine& engine, Topology topo, int m, int n_max, int digits,
                               int tail = kDefaultTail);

enum class Family { Plane, Triangular, Cylinder, Twisted };

inline constexpr Family kAllFamilies[] = {Family::Plane, Family::Triangular, Family::Cylinder,
                                          Family::Twisted};

const char* family_name(Family f);
bool parse_family(const std::string& token, Family* out);
Topology family_topology(Family f);

struct FamilyBudget {
  int m_max;
  int n_max;
};
// The twisted family converges slowest in m; its width budget is roughly
// double the plane's.
FamilyBudget default_budget(Family f);

// Second-level two-point pairs are spaced kPairGap apart in m. An odd gap
// keeps opposite-parity residuals reinforcing each other, so the estimate
// sequence stays strictly sign-alternating well past where adjacent pairs
// lose two-sidedness (measured: adjacent pairs land one-sided of the limit
// near m = 13 on the plane family).
inline constexpr int kPairGap = 3;

struct ConstantRecord {
  std::string name;
  std::optional<Bracket> bracket;
  std::string error;  // set when the bracket failed to stabilize
};

struct ConstantReport {
  Family family = Family::Plane;
  int m_max = 0, n_max = 0, digits = 0, tail = 0, pair_gap = kPairGap;
  std::vector<ConstantRecord> records;
  std::vector<StripConstants> strips;

  const ConstantRecord* find(const std::string& name) const;
};

// Brackets for every constant of the family: f, e^f and the boundary
// coefficients (k, k_minus and offset s for the open families; k1, k2 for
// the wrapped ones), from two_point_extrapolate + parity_bracket over the
// per-strip constants.
ConstantReport estimate_family_constants(Engine& engine, Family family, int m_max, int n_max,
                                         int digits, int tail = kDefaultTail);

// Offset s with which redefining the area as (m+s)(n+s) cancels the
// first-order boundary term: s = k / f, by interval arithmetic.
Bracket boundary_neutral_offset(const Bracket& f, const Bracket& k);

// Sign of the degree-24 polynomial at num/den, evaluated exactly.
int triangular_polynomial_sign(long num, long den);

// Its unique real root in [1.3, 1.5], by sign bisection with exact
// evaluation, refined to the digit budget.
BigFloat triangular_polynomial_root(int digits);

}  // namespace hsq
