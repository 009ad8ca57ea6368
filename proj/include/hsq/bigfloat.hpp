#pragma once

#include <mpfr.h>

#include <string>

#include "hsq/topology.hpp"

namespace hsq {

// Arbitrary-precision decimal with an explicit significant-digit budget.
// Every operation carries 10 guard digits beyond the largest operand
// budget and is correctly rounded, so results are accurate to well within
// one unit in the last requested place.
class BigFloat {
 public:
  BigFloat() : BigFloat(15) {}
  explicit BigFloat(int digits);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat from_integer(const ExactCount& z, int digits);
  static BigFloat from_string(const std::string& s, int digits);
  static BigFloat ratio(long num, long den, int digits);
  // z * 2^exp2, rounded to the budget.
  static BigFloat from_scaled(const ExactCount& z, long exp2, int digits);

  int digits() const { return digits_; }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;

  BigFloat ln() const;   // pre: positive
  BigFloat exp() const;
  BigFloat abs() const;
  BigFloat half() const;
  // |this| * 10^-digits: one unit in the digits-th significant place.
  BigFloat digit_eps(int digits) const;

  int cmp(const BigFloat& o) const;
  bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
  bool operator<=(const BigFloat& o) const { return cmp(o) <= 0; }
  bool operator>(const BigFloat& o) const { return cmp(o) > 0; }
  bool operator>=(const BigFloat& o) const { return cmp(o) >= 0; }
  bool is_zero() const;
  int sign() const;

  double to_double() const;
  std::string str(int significant = 0) const;  // 0: the full budget

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  static long prec_bits(int digits);
  mpfr_t v_;
  int digits_;
};

// Number of leading significant decimal digits two values share; 0 when
// signs or decimal exponents differ.
int digits_agreed(const BigFloat& a, const BigFloat& b);

// ln(c) for an exact integer c >= 1: c is split as 2^e * x with x in
// [1,2), so only a unit-scale mantissa enters the transcendental kernel.
BigFloat big_log(const ExactCount& c, int digits);

}  // namespace hsq
