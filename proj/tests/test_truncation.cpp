#include "sincprod/truncation.hpp"
#include "support.hpp"

namespace sincprod {
namespace {

using namespace test;

TEST(SumSeries, GeometricSeriesConvergesWithHonestTail) {
  const PrecisionContext c = ctx(30);
  const Bits bits = c.working_bits();
  const PartialEvaluation r = sum_series([&](long j) { return Real::power_of_two(-j, bits); }, 0, c);
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.tail_bound, c.tail_tolerance);
  EXPECT_LE(r.terms_used, c.max_terms);
  // True tail equals the last term, and the rule's estimate r/(1-r) is at least that.
  EXPECT_TRUE(close(r.value, Real(2L, bits), r.tail_bound));
  EXPECT_GT(abs(r.value - 2L), Real(0L, 64));
}

TEST(SumSeries, ExponentialSeries) {
  const PrecisionContext c = ctx(50);
  const Bits bits = c.working_bits();
  Real term(1L, bits);
  const PartialEvaluation r = sum_series(
      [&](long j) {
        if (j > 0) term /= j;
        return term;
      },
      0, c);
  EXPECT_TRUE(close(r.value, exp(Real(1L, bits)), r.tail_bound));
  EXPECT_LE(r.tail_bound, c.tail_tolerance);
}

TEST(SumSeries, SlowSeriesThrowsWithPartial) {
  PrecisionContext c = ctx(30);
  c.max_terms = 50;
  try {
    sum_series([&](long j) { return Real(1L, 200) / (j * j); }, 1, c);
    FAIL() << "expected NoConvergence";
  } catch (const NoConvergence& e) {
    EXPECT_EQ(e.partial().terms_used, 50);
    EXPECT_FALSE(e.partial().converged);
    EXPECT_GT(e.partial().value, Real(1L, 64));
  }
}

TEST(SumSeries, RatioAboveMaxKeepsGoing) {
  // Ratio 0.9 exceeds the 0.75 default, so the rule never fires.
  PrecisionContext c = ctx(20);
  c.max_terms = 2000;
  const Real r9 = R("0.9", 200);
  Real t(1L, 200);
  EXPECT_THROW(sum_series(
                   [&](long j) {
                     if (j > 0) t *= r9;
                     return t;
                   },
                   0, c),
               NoConvergence);
  t = Real(1L, 200);
  const PartialEvaluation ok = sum_series(
      [&](long j) {
        if (j > 0) t *= r9;
        return t;
      },
      0, c, TruncationRule{0.95});
  EXPECT_TRUE(close(ok.value, Real(10L, 64), tol(8)));
}

TEST(MultiplySeries, WallisLikeProductViaLogs) {
  // prod_{j>=0} (1 + 2^-2^j) = 2
  const PrecisionContext c = ctx(40);
  const Bits bits = c.working_bits();
  const ProductEvaluation p = multiply_series(
      [&](long j) {
        if (j > 30) return SignedLog{Real(bits), false};
        return SignedLog{log1p(Real::power_of_two(-(1L << j), bits)), false};
      },
      0, c);
  EXPECT_FALSE(p.negative);
  EXPECT_TRUE(close(p.value, Real(2L, bits), tol(38)));
}

TEST(MultiplySeries, SignTracking) {
  const PrecisionContext c = ctx(20);
  const Bits bits = c.working_bits();
  // Factors -(1 + 2^-j-1) for j = 0 only, then positive.
  const ProductEvaluation p = multiply_series(
      [&](long j) { return SignedLog{log1p(Real::power_of_two(-j - 1, bits)), j == 0}; }, 0, c);
  EXPECT_TRUE(p.negative);
  EXPECT_LT(p.value, Real(0L, 64));
}

}  // namespace
}  // namespace sincprod
