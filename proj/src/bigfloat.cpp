#include "hsq/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <vector>

namespace hsq {

namespace {
constexpr int kGuardDigits = 10;
}

long BigFloat::prec_bits(int digits) {
  if (digits < 1) throw std::invalid_argument("BigFloat: digit budget must be >= 1");
  return long(std::ceil((digits + kGuardDigits) * 3.3219280948873626)) + 8;
}

BigFloat::BigFloat(int digits) : digits_(digits) {
  mpfr_init2(v_, prec_bits(digits));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) : digits_(o.digits_) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept : digits_(o.digits_) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
    digits_ = o.digits_;
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) {
    mpfr_swap(v_, o.v_);
    digits_ = o.digits_;
  }
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_integer(const ExactCount& z, int digits) {
  BigFloat r(digits);
  mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_string(const std::string& s, int digits) {
  BigFloat r(digits);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("BigFloat: cannot parse '" + s + "'");
  return r;
}

BigFloat BigFloat::ratio(long num, long den, int digits) {
  if (den == 0) throw std::invalid_argument("BigFloat::ratio: zero denominator");
  BigFloat r(digits);
  mpfr_set_si(r.v_, num, MPFR_RNDN);
  mpfr_div_si(r.v_, r.v_, den, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_scaled(const ExactCount& z, long exp2, int digits) {
  BigFloat r(digits);
  mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
  mpfr_mul_2si(r.v_, r.v_, exp2, MPFR_RNDN);
  return r;
}

namespace {
int joint_digits(const BigFloat& a, const BigFloat& b) {
  return std::max(a.digits(), b.digits());
}
}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint_digits(a, b));
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint_digits(a, b));
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint_digits(a, b));
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  if (b.is_zero()) throw std::domain_error("BigFloat: division by zero");
  BigFloat r(joint_digits(a, b));
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(digits_);
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::ln() const {
  if (sign() <= 0) throw std::domain_error("BigFloat::ln: nonpositive argument");
  BigFloat r(digits_);
  mpfr_log(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::exp() const {
  BigFloat r(digits_);
  mpfr_exp(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(digits_);
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::half() const {
  BigFloat r(digits_);
  mpfr_div_2ui(r.v_, v_, 1, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::digit_eps(int digits) const {
  BigFloat r = abs();
  mpfr_t p;
  mpfr_init2(p, 64);
  mpfr_set_ui(p, 10, MPFR_RNDN);
  mpfr_pow_si(p, p, -digits, MPFR_RNDN);
  mpfr_mul(r.v_, r.v_, p, MPFR_RNDN);
  mpfr_clear(p);
  return r;
}

int BigFloat::cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }

bool BigFloat::is_zero() const { return mpfr_zero_p(v_) != 0; }

int BigFloat::sign() const { return mpfr_sgn(v_); }

double BigFloat::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string BigFloat::str(int significant) const {
  int digs = significant > 0 ? significant : digits_;
  std::vector<char> buf(size_t(digs) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digs, v_);
  return std::string(buf.data());
}

int digits_agreed(const BigFloat& a, const BigFloat& b) {
  if (a.is_zero() && b.is_zero()) return std::min(a.digits(), b.digits());
  if (a.sign() != b.sign() || a.is_zero() || b.is_zero()) return 0;
  const int budget = std::min(a.digits(), b.digits());
  mpfr_exp_t ea, eb;
  char* sa = mpfr_get_str(nullptr, &ea, 10, size_t(budget), a.raw(), MPFR_RNDN);
  char* sb = mpfr_get_str(nullptr, &eb, 10, size_t(budget), b.raw(), MPFR_RNDN);
  int agreed = 0;
  if (ea == eb) {
    const char* pa = sa;
    const char* pb = sb;
    if (*pa == '-') ++pa, ++pb;
    while (pa[agreed] && pb[agreed] && pa[agreed] == pb[agreed]) ++agreed;
  }
  mpfr_free_str(sa);
  mpfr_free_str(sb);
  return std::min(agreed, budget);
}

BigFloat big_log(const ExactCount& c, int digits) {
  if (c < 1) throw std::domain_error("big_log: argument must be >= 1");
  const long e = long(mpz_sizeinbase(c.get_mpz_t(), 2)) - 1;
  BigFloat x = BigFloat::from_scaled(c, -e, digits);  // in [1, 2)
  BigFloat r(digits);
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  if (e > 0) {
    BigFloat ln2(digits);
    mpfr_const_log2(ln2.raw(), MPFR_RNDN);
    mpfr_mul_si(ln2.raw(), ln2.raw(), e, MPFR_RNDN);
    mpfr_add(r.raw(), r.raw(), ln2.raw(), MPFR_RNDN);
  }
  return r;
}

}  // namespace hsq
