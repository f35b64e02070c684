#pragma once

// Shared helpers for the unit tests. Boost.Multiprecision supplies oracle
// values that share no code with the library under test.

#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <string>

#include "sincprod/precision.hpp"
#include "sincprod/real.hpp"
#include "sincprod/report.hpp"

namespace sincprod::test {

using Oracle = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<120>>;

inline Oracle oracle(const std::string& text) { return Oracle(text); }

inline Real from_oracle(const Oracle& x, Bits bits = 500) { return Real::parse(x.str(120), bits); }

inline Oracle to_oracle(const Real& x) { return Oracle(x.to_exact_string()); }

inline PrecisionContext ctx(int digits = 50) { return PrecisionContext::with_digits(digits); }

inline Real tol(int exponent) { return decimal_tolerance(exponent); }

inline Real R(const std::string& text, Bits bits = 300) { return Real::parse(text, bits); }

inline ::testing::AssertionResult close(const Real& actual, const Real& expected, const Real& tolerance) {
  const Real dev = abs(actual - expected);
  if (dev <= tolerance) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << actual.to_string(40) << " vs " << expected.to_string(40) << " differ by "
                                       << dev.to_string(4) << " > " << tolerance.to_string(4);
}

inline ::testing::AssertionResult close(const Real& actual, const Oracle& expected, const Real& tolerance) {
  return close(actual, from_oracle(expected), tolerance);
}

inline ::testing::AssertionResult close_rel(const Real& actual, const Real& expected, const Real& tolerance) {
  const Real dev = relative_difference(actual, expected);
  if (dev <= tolerance) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << actual.to_string(40) << " vs " << expected.to_string(40)
                                       << " relative deviation " << dev.to_string(4);
}

inline const Real& lhs_real(const VerificationReport& r) { return std::get<Real>(r.lhs); }
inline const Real& rhs_real(const VerificationReport& r) { return std::get<Real>(r.rhs); }

}  // namespace sincprod::test
