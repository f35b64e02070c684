#include "sincprod/precision.hpp"

#include <cmath>
#include <string>

#include "sincprod/errors.hpp"

namespace sincprod {

PrecisionContext PrecisionContext::with_digits(int digits) {
  PrecisionContext ctx;
  ctx.digits = digits;
  ctx.tail_tolerance = decimal_tolerance(digits - 10);
  ctx.rel_tolerance = decimal_tolerance(digits - 10);
  return ctx;
}

void PrecisionContext::validate() const {
  if (digits < 10) throw ConfigError("digits must be at least 10, got " + std::to_string(digits));
  if (!(tail_tolerance > 0L)) throw ConfigError("tail_tolerance must be positive");
  if (!(rel_tolerance > 0L)) throw ConfigError("rel_tolerance must be positive");
  if (max_terms < 1) throw ConfigError("max_terms must be at least 1");
  if (guard_digits < 0) throw ConfigError("guard_digits must be non-negative");
}

int PrecisionContext::reduction_digits(unsigned long q, unsigned long j) const {
  const double growth = static_cast<double>(j) * std::log10(static_cast<double>(q));
  return digits + static_cast<int>(std::ceil(growth - 1e-12)) + guard_digits;
}

PrecisionContext PrecisionContext::with_tail_tolerance(const Real& tolerance) const {
  PrecisionContext out = *this;
  out.tail_tolerance = tolerance;
  return out;
}

PrecisionContext PrecisionContext::with_max_terms(int terms) const {
  PrecisionContext out = *this;
  out.max_terms = terms;
  return out;
}

Real decimal_tolerance(int exponent) {
  return Real::parse("1e" + std::to_string(-exponent), kDefaultBits);
}

}  // namespace sincprod
