#include "sincprod/real.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "sincprod/errors.hpp"

namespace sincprod {
namespace {

constexpr double kLog2Of10 = 3.32192809488736234787;

struct MpfrString {
  char* text = nullptr;
  ~MpfrString() {
    if (text != nullptr) mpfr_free_str(text);
  }
};

template <typename Op>
Real binary(const Real& a, const Real& b, Op op) {
  Real out(std::max(a.precision(), b.precision()));
  op(out.get(), a.get(), b.get(), MPFR_RNDN);
  return out;
}

template <typename Op>
Real unary(const Real& x, Op op) {
  Real out(x.precision());
  op(out.get(), x.get(), MPFR_RNDN);
  return out;
}

}  // namespace

Bits bits_for_digits(int digits) {
  return static_cast<Bits>(std::ceil(digits * kLog2Of10)) + 1;
}

Real::Real() : Real(kDefaultBits) {}

Real::Real(Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const mpq_class& value, Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const mpz_class& value, Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real Real::parse(std::string_view text, Bits bits) {
  Real out(bits);
  std::string copy(text);
  if (copy.empty() || mpfr_set_str(out.value_, copy.c_str(), 10, MPFR_RNDN) != 0) {
    throw DomainError("not a decimal number: '" + copy + "'");
  }
  return out;
}

Real Real::from_double(double value, Bits bits) {
  Real out(bits);
  mpfr_set_d(out.value_, value, MPFR_RNDN);
  return out;
}

Real Real::power_of_two(long exponent, Bits bits) {
  Real out(bits);
  mpfr_set_ui_2exp(out.value_, 1, exponent, MPFR_RNDN);
  return out;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::rounded(Bits bits) const {
  Real out(bits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

std::string Real::to_string(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() > 0 ? "inf" : "-inf";
  if (is_zero()) return "0";
  digits = std::max(digits, 2);

  mpfr_exp_t exp10 = 0;
  MpfrString raw;
  raw.text = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), value_, MPFR_RNDN);
  std::string mantissa(raw.text);
  std::string sign_prefix;
  if (mantissa.front() == '-') {
    sign_prefix = "-";
    mantissa.erase(0, 1);
  }
  // value = 0.mantissa * 10^exp10
  const long point = static_cast<long>(exp10);
  std::string out;
  if (point >= -3 && point <= 16) {
    if (point <= 0) {
      out = "0." + std::string(static_cast<size_t>(-point), '0') + mantissa;
    } else if (point >= static_cast<long>(mantissa.size())) {
      out = mantissa + std::string(static_cast<size_t>(point) - mantissa.size(), '0');
    } else {
      out = mantissa.substr(0, static_cast<size_t>(point)) + "." + mantissa.substr(static_cast<size_t>(point));
    }
  } else {
    out = mantissa.substr(0, 1) + "." + mantissa.substr(1) + "e" + std::to_string(point - 1);
  }
  return sign_prefix + out;
}

std::string Real::to_exact_string() const {
  if (!is_finite() || is_zero()) return to_string(2);
  mpfr_exp_t exp10 = 0;
  MpfrString raw;
  raw.text = mpfr_get_str(nullptr, &exp10, 10, 0, value_, MPFR_RNDN);
  std::string mantissa(raw.text);
  std::string sign_prefix;
  if (mantissa.front() == '-') {
    sign_prefix = "-";
    mantissa.erase(0, 1);
  }
  return sign_prefix + mantissa.substr(0, 1) + "." + mantissa.substr(1) + "e" +
         std::to_string(static_cast<long>(exp10) - 1);
}

Real& Real::operator+=(const Real& rhs) { return *this = *this + rhs; }
Real& Real::operator-=(const Real& rhs) { return *this = *this - rhs; }
Real& Real::operator*=(const Real& rhs) { return *this = *this * rhs; }
Real& Real::operator/=(const Real& rhs) { return *this = *this / rhs; }
Real& Real::operator+=(long rhs) {
  mpfr_add_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(long rhs) {
  mpfr_sub_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real operator-(const Real& x) { return unary(x, mpfr_neg); }
Real operator+(const Real& a, const Real& b) { return binary(a, b, mpfr_add); }
Real operator-(const Real& a, const Real& b) { return binary(a, b, mpfr_sub); }
Real operator*(const Real& a, const Real& b) { return binary(a, b, mpfr_mul); }
Real operator/(const Real& a, const Real& b) { return binary(a, b, mpfr_div); }

Real operator+(const Real& a, long b) {
  Real out(a.precision());
  mpfr_add_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}
Real operator-(const Real& a, long b) {
  Real out(a.precision());
  mpfr_sub_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}
Real operator*(const Real& a, long b) {
  Real out(a.precision());
  mpfr_mul_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}
Real operator/(const Real& a, long b) {
  Real out(a.precision());
  mpfr_div_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}
Real operator-(long a, const Real& b) {
  Real out(b.precision());
  mpfr_si_sub(out.value_, a, b.value_, MPFR_RNDN);
  return out;
}
Real operator/(long a, const Real& b) {
  Real out(b.precision());
  mpfr_si_div(out.value_, a, b.value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (a.is_nan() || b.is_nan()) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, long b) {
  if (a.is_nan()) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real expm1(const Real& x) { return unary(x, mpfr_expm1); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log1p(const Real& x) { return unary(x, mpfr_log1p); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real tan(const Real& x) { return unary(x, mpfr_tan); }
Real cot(const Real& x) { return unary(x, mpfr_cot); }
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real tanh(const Real& x) { return unary(x, mpfr_tanh); }
Real floor(const Real& x) {
  Real out(x.precision());
  mpfr_floor(out.get(), x.get());
  return out;
}
Real atan2(const Real& y, const Real& x) { return binary(y, x, mpfr_atan2); }
Real pow(const Real& base, const Real& exponent) { return binary(base, exponent, mpfr_pow); }
Real pow(const Real& base, long exponent) {
  Real out(base.precision());
  mpfr_pow_si(out.get(), base.get(), exponent, MPFR_RNDN);
  return out;
}
Real ldexp(const Real& x, long k) {
  Real out(x.precision());
  mpfr_mul_2si(out.get(), x.get(), k, MPFR_RNDN);
  return out;
}
Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real pi(Bits bits) {
  Real out(bits);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return out;
}

Real log2_constant(Bits bits) {
  Real out(bits);
  mpfr_const_log2(out.get(), MPFR_RNDN);
  return out;
}

Real euler_constant(Bits bits) {
  Real out(bits);
  mpfr_const_euler(out.get(), MPFR_RNDN);
  return out;
}

Real relative_difference(const Real& a, const Real& b) {
  Real diff = abs(a - b);
  if (b.is_zero()) return diff;
  return diff / abs(b);
}

}  // namespace sincprod
