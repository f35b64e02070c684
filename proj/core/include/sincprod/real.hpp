#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace sincprod {

using Bits = mpfr_prec_t;

inline constexpr Bits kDefaultBits = 64;

// Number of mantissa bits that hold `digits` significant decimal digits with
// one bit to spare, so a `digits`-digit decimal string survives a round trip.
Bits bits_for_digits(int digits);

// Owning MPFR value. Every value carries its own precision; binary
// operations produce a result at the larger of the operand precisions and
// round to nearest. Moved-from values are valid (zero at minimal precision).
class Real {
 public:
  Real();
  explicit Real(Bits bits);
  Real(long value, Bits bits);
  Real(const mpq_class& value, Bits bits);
  Real(const mpz_class& value, Bits bits);

  // Accepts anything mpfr_set_str understands in base 10 ("1.5", "-2e-40").
  static Real parse(std::string_view text, Bits bits);
  static Real from_double(double value, Bits bits);
  // 2^exponent, exact.
  static Real power_of_two(long exponent, Bits bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  Bits precision() const { return mpfr_get_prec(value_); }
  Real rounded(Bits bits) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  bool is_nan() const { return mpfr_nan_p(value_) != 0; }
  bool is_integer() const { return mpfr_integer_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(value_, MPFR_RNDN); }
  // Exponent e with 0.5 <= |x| / 2^e < 1; meaningless for zero.
  long binary_exponent() const { return mpfr_get_exp(value_); }

  // `digits` significant decimal digits; fixed notation for moderate
  // magnitudes, otherwise d.ddd...e±N.
  std::string to_string(int digits) const;
  // Shortest decimal string that parses back to exactly this value at this
  // precision.
  std::string to_exact_string() const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator+=(long rhs);
  Real& operator-=(long rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);

  friend Real operator-(const Real& x);
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);
  friend Real operator*(const Real& a, long b);
  friend Real operator/(const Real& a, long b);
  friend Real operator+(long a, const Real& b) { return b + a; }
  friend Real operator-(long a, const Real& b);
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(long a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b);

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real cot(const Real& x);
Real sinh(const Real& x);
Real tanh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& base, const Real& exponent);
Real pow(const Real& base, long exponent);
Real floor(const Real& x);
// x * 2^k, exact.
Real ldexp(const Real& x, long k);
Real max(const Real& a, const Real& b);

Real pi(Bits bits);
Real log2_constant(Bits bits);
Real euler_constant(Bits bits);

// |a - b| / |b|, or |a - b| when b is zero.
Real relative_difference(const Real& a, const Real& b);

}  // namespace sincprod
