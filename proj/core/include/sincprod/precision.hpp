#pragma once

#include "sincprod/real.hpp"

namespace sincprod {

// Working precision, truncation tolerances and term caps shared by every
// evaluation. Values are plain data; copy freely across threads.
struct PrecisionContext {
  int digits = 50;
  Real tail_tolerance = Real::parse("1e-40", kDefaultBits);
  Real rel_tolerance = Real::parse("1e-40", kDefaultBits);
  int max_terms = 256;
  int guard_digits = 10;

  // Defaults scaled to `digits`: both tolerances 10^-(digits-10).
  static PrecisionContext with_digits(int digits);

  // Throws ConfigError unless digits >= 10, tail_tolerance > 0,
  // rel_tolerance > 0, max_terms >= 1 and guard_digits >= 0.
  void validate() const;

  Bits bits() const { return bits_for_digits(digits); }
  Bits working_bits() const { return bits_for_digits(digits + guard_digits); }
  // digits + ceil(j * log10(q)) + guard_digits
  int reduction_digits(unsigned long q, unsigned long j) const;
  Bits reduction_bits(unsigned long q, unsigned long j) const {
    return bits_for_digits(reduction_digits(q, j));
  }

  PrecisionContext with_tail_tolerance(const Real& tolerance) const;
  PrecisionContext with_max_terms(int terms) const;
};

// 10^-exponent at kDefaultBits.
Real decimal_tolerance(int exponent);

}  // namespace sincprod
