#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sincprod {

// a = rational_part + pi_multiple * pi, both rationals kept in lowest terms.
// Exceptional points (integer multiples of pi, dyadic tan poles) are decided
// from this representation, never from a rounded value.
class ExactArgument {
 public:
  ExactArgument() = default;
  ExactArgument(mpq_class rational_part, mpq_class pi_multiple);

  static ExactArgument rational(const mpq_class& value) { return ExactArgument(value, 0); }
  static ExactArgument pi_times(const mpq_class& value) { return ExactArgument(0, value); }

  // Textual form "p/q + r/s*pi". Also accepted: decimals and scientific
  // notation (parsed exactly), "pi", "pi/3", "2*pi/3", "-3/8*pi", sums and
  // differences of such terms. Throws DomainError on malformed input.
  static ExactArgument parse(std::string_view text);

  const mpq_class& rational_part() const { return rational_; }
  const mpq_class& pi_multiple() const { return pi_; }

  bool is_zero() const { return sgn(rational_) == 0 && sgn(pi_) == 0; }
  bool is_pure_pi_multiple() const { return sgn(rational_) == 0 && sgn(pi_) != 0; }
  bool is_rational() const { return sgn(pi_) == 0; }

  ExactArgument scaled(const mpq_class& factor) const;
  ExactArgument operator-() const { return ExactArgument(-rational_, -pi_); }
  friend ExactArgument operator+(const ExactArgument& a, const ExactArgument& b);
  friend ExactArgument operator-(const ExactArgument& a, const ExactArgument& b);
  friend bool operator==(const ExactArgument& a, const ExactArgument& b) {
    return a.rational_ == b.rational_ && a.pi_ == b.pi_;
  }

  // Canonical "p/q + r/s*pi"; pure forms drop the zero part ("3/8*pi", "1/2").
  std::string to_string() const;

 private:
  mpq_class rational_{0};
  mpq_class pi_{0};
};

// Exact decimal/fraction literal ("1.25", "-3/7", "2e-6") to a rational.
mpq_class parse_rational(std::string_view text);

}  // namespace sincprod
