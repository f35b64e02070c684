#include <cmath>
#include <thread>

#include "sincprod/classify.hpp"
#include "sincprod/complex.hpp"
#include "sincprod/elementary.hpp"
#include "sincprod/errors.hpp"
#include "sincprod/exact_argument.hpp"
#include "support.hpp"

namespace sincprod {
namespace {

using namespace test;
using boost::multiprecision::cos;
using boost::multiprecision::sin;
using boost::multiprecision::tan;

TEST(Precision, BitsForDigitsCoverDecimalDigits) {
  for (int d : {10, 16, 50, 200}) {
    EXPECT_GE(static_cast<double>(bits_for_digits(d)), d * std::log2(10.0));
  }
}

TEST(Precision, DefaultsScaleWithDigits) {
  const PrecisionContext c = PrecisionContext::with_digits(50);
  EXPECT_EQ(c.tail_tolerance, decimal_tolerance(40));
  EXPECT_EQ(c.rel_tolerance, decimal_tolerance(40));
  EXPECT_EQ(PrecisionContext::with_digits(30).tail_tolerance, decimal_tolerance(20));
}

TEST(Precision, ValidateRejectsBadContexts) {
  PrecisionContext c = ctx();
  c.digits = 9;
  EXPECT_THROW(c.validate(), ConfigError);
  c = ctx();
  c.max_terms = 0;
  EXPECT_THROW(c.validate(), ConfigError);
  c = ctx();
  c.tail_tolerance = Real(0L, 64);
  EXPECT_THROW(c.validate(), ConfigError);
  EXPECT_NO_THROW(ctx().validate());
}

TEST(Precision, ReductionDigitsGrowLinearly) {
  const PrecisionContext c = ctx(50);
  EXPECT_EQ(c.reduction_digits(2, 0), 60);
  EXPECT_EQ(c.reduction_digits(2, 100), 50 + 31 + 10);
  EXPECT_EQ(c.reduction_digits(10, 7), 67);
}

TEST(RealNumber, DecimalRoundTripAtContextPrecision) {
  const Bits b = bits_for_digits(40);
  const Real x = Real::parse("3.1415926535897932384626433832795028841971", b);
  EXPECT_EQ(Real::parse(x.to_exact_string(), b), x);
  EXPECT_EQ(Real::parse("-2.5e-30", b).to_string(3), "-2.50e-30");
}

TEST(RealNumber, ArithmeticUsesLargerPrecision) {
  const Real a(1L, 64);
  const Real b = Real::parse("0.1", 300);
  EXPECT_EQ((a + b).precision(), 300);
  EXPECT_TRUE(close(a / 3L * 3L, Real(1L, 64), tol(18)));
}

TEST(ExactArgumentParse, AcceptsPiForms) {
  EXPECT_EQ(ExactArgument::parse("pi"), ExactArgument::pi_times(1));
  EXPECT_EQ(ExactArgument::parse("pi/3"), ExactArgument::pi_times(mpq_class(1, 3)));
  EXPECT_EQ(ExactArgument::parse("2*pi/3"), ExactArgument::pi_times(mpq_class(2, 3)));
  EXPECT_EQ(ExactArgument::parse("-3/8*pi"), ExactArgument::pi_times(mpq_class(-3, 8)));
  EXPECT_EQ(ExactArgument::parse("1/2 + 1/4*pi"), ExactArgument(mpq_class(1, 2), mpq_class(1, 4)));
  EXPECT_EQ(ExactArgument::parse("0.1"), ExactArgument::rational(mpq_class(1, 10)));
  EXPECT_EQ(ExactArgument::parse("2e-6"), ExactArgument::rational(mpq_class(1, 500000)));
  EXPECT_THROW(ExactArgument::parse("pie"), DomainError);
  EXPECT_THROW(ExactArgument::parse(""), DomainError);
}

TEST(ExactArgumentParse, CanonicalTextRoundTrips) {
  for (const char* t : {"3/8*pi", "1/2", "-7/3 + 5/2*pi", "12*pi"}) {
    const ExactArgument a = ExactArgument::parse(t);
    EXPECT_EQ(ExactArgument::parse(a.to_string()), a) << t;
  }
}

TEST(Realize, MatchesOracle) {
  const PrecisionContext c = ctx(30);
  const Real half_pi = realize(ExactArgument::pi_times(mpq_class(1, 2)), c);
  EXPECT_EQ(half_pi.to_string(30), "1.57079632679489661923132169164");
  EXPECT_EQ(realize(ExactArgument::rational(1), c), Real(1L, 64));
}

TEST(Classify, ExamplesFromTheDefinition) {
  ArgumentClass c = classify(ExactArgument::parse("3*pi"));
  EXPECT_EQ(c.kind, ArgumentClass::Kind::odd_pi_multiple);
  EXPECT_EQ(c.n, 2);
  c = classify(ExactArgument::parse("12*pi"));
  EXPECT_EQ(c.kind, ArgumentClass::Kind::even_pi_multiple);
  EXPECT_EQ(c.m, 2);
  EXPECT_EQ(c.n, 2);
  c = classify(ExactArgument::parse("3/8*pi"));
  EXPECT_EQ(c.kind, ArgumentClass::Kind::pole_dyadic);
  EXPECT_EQ(c.k, 3);
  EXPECT_EQ(classify(ExactArgument::parse("pi/3")).kind, ArgumentClass::Kind::regular);
  EXPECT_EQ(classify(ExactArgument::parse("1")).kind, ArgumentClass::Kind::regular);
  EXPECT_EQ(classify(ExactArgument::parse("-5*pi")).n, 3);
}

TEST(Classify, EveryDyadicDecompositionIsUnique) {
  for (long m = 0; m <= 6; ++m) {
    for (long n = 1; n <= 6; ++n) {
      const ArgumentClass c = classify(ExactArgument::pi_times(mpq_class((1L << m) * (2 * n - 1))));
      EXPECT_EQ(c.m, m);
      EXPECT_EQ(c.n, n);
      EXPECT_EQ(c.kind, m == 0 ? ArgumentClass::Kind::odd_pi_multiple : ArgumentClass::Kind::even_pi_multiple);
    }
  }
}

TEST(Elementary, AgreesWithOracle) {
  const PrecisionContext c = ctx(50);
  for (const char* t : {"1", "0.3", "2.2", "-2.9", "7.5"}) {
    const Real x = Real::parse(t, c.working_bits());
    const Oracle o = oracle(t);
    EXPECT_TRUE(close(elementary(ElementaryFn::sin, x, c), sin(o), tol(49))) << t;
    EXPECT_TRUE(close(elementary(ElementaryFn::cos, x, c), cos(o), tol(49))) << t;
    EXPECT_TRUE(close_rel(elementary(ElementaryFn::tan, x, c), from_oracle(tan(o)), tol(48))) << t;
  }
  EXPECT_EQ(elementary(ElementaryFn::sin, Real::parse("1", 64), ctx(16)).to_string(16), "0.8414709848078965");
  EXPECT_EQ(elementary(ElementaryFn::cos, Real(0L, 64), c), Real(1L, 64));
}

TEST(Elementary, ExactPolesAndZeros) {
  const PrecisionContext c = ctx();
  EXPECT_THROW(elementary(ElementaryFn::tan, ExactArgument::parse("pi/2"), c), DomainError);
  EXPECT_THROW(elementary(ElementaryFn::cot, ExactArgument::parse("pi"), c), DomainError);
  EXPECT_TRUE(elementary(ElementaryFn::sin, ExactArgument::parse("3*pi"), c).is_zero());
  EXPECT_TRUE(elementary(ElementaryFn::cos, ExactArgument::parse("-pi/2"), c).is_zero());
  EXPECT_THROW(elementary(ElementaryFn::ln, Real(0L, 64), c), DomainError);
}

TEST(Elementary, PythagoreanIdentityWithinFourUlp) {
  const PrecisionContext c = ctx(50);
  const Real ulp4 = Real::power_of_two(-static_cast<long>(c.bits()) + 2, 64);
  for (double x = -10; x <= 10; x += 0.37) {
    const Real v = Real::from_double(x, c.bits());
    const Real s = elementary(ElementaryFn::sin, v, c);
    const Real k = elementary(ElementaryFn::cos, v, c);
    EXPECT_TRUE(close(s * s + k * k, Real(1L, 64), ulp4)) << x;
  }
}

TEST(Elementary, DoublingDigitsKeepsReportedDigits) {
  for (const char* t : {"1", "2.2", "100.5"}) {
    const Real lo = elementary(ElementaryFn::sin, Real::parse(t, 500), ctx(30));
    const Real hi = elementary(ElementaryFn::sin, Real::parse(t, 500), ctx(60));
    EXPECT_TRUE(close(lo, hi, tol(29))) << t;
  }
}

TEST(TrigScaled, RelativeAccuracyForHugeAndTinyScales) {
  const Bits bits = bits_for_digits(60);
  const ExactArgument a = ExactArgument::rational(1);
  // sin(2^100) from a 150-digit oracle computation.
  Oracle big = boost::multiprecision::ldexp(Oracle(1), 100);
  EXPECT_TRUE(close_rel(trig_scaled(ElementaryFn::sin, a, mpq_class(mpz_class(1) << 100), bits), from_oracle(sin(big)),
                        tol(55)));
  Oracle tiny = boost::multiprecision::ldexp(Oracle(1), -200);
  EXPECT_TRUE(close_rel(trig_scaled(ElementaryFn::tan, a, mpq_class(mpz_class(1), mpz_class(1) << 200), bits),
                        from_oracle(tan(tiny)), tol(55)));
}

TEST(TrigScaled, PiMultiplesAreExact) {
  const Bits bits = 200;
  const ExactArgument third = ExactArgument::parse("pi/3");
  for (long j = 0; j < 40; ++j) {
    const Real t = trig_scaled(ElementaryFn::tan, third, mpq_class(mpz_class(1) << j), bits);
    // 2^j mod 3 alternates 1, 2, so tan alternates +sqrt3, -sqrt3.
    EXPECT_TRUE(close(abs(t), sqrt(Real(3L, bits)), tol(55)));
    EXPECT_EQ(t.sign(), j % 2 == 0 ? 1 : -1) << j;
  }
  EXPECT_TRUE(trig_scaled(ElementaryFn::sin, ExactArgument::parse("pi/8"), 8, bits).is_zero());
  EXPECT_THROW(trig_scaled(ElementaryFn::tan, ExactArgument::parse("pi/8"), 4, bits), DomainError);
}

TEST(ReduceScaled, SpecExamples) {
  const PrecisionContext c = ctx(50);
  EXPECT_TRUE(reduce_scaled(ExactArgument::parse("pi/4"), 2, 3, c).is_zero());
  EXPECT_TRUE(close(reduce_scaled(ExactArgument::parse("pi/3"), 3, 5, c), realize(ExactArgument::parse("pi"), c),
                    tol(49)));
  // a = 1, j = 100: stable under doubled digits and doubled guard.
  const Real r50 = reduce_scaled(ExactArgument::rational(1), 2, 100, c);
  const Real r100 = reduce_scaled(ExactArgument::rational(1), 2, 100, ctx(100));
  EXPECT_TRUE(close(r50, r100, tol(49)));
  PrecisionContext more_guard = c;
  more_guard.guard_digits *= 2;
  EXPECT_TRUE(close(r50, reduce_scaled(ExactArgument::rational(1), 2, 100, more_guard), tol(49)));
}

TEST(PowPrincipal, SpecExamples) {
  const Bits bits = 200;
  const Real half = Real::parse("0.5", bits);
  const Complex i = pow_principal(Complex(Real(-1L, bits), Real(bits)), half);
  EXPECT_TRUE(close(i.re, Real(bits), tol(55)));
  EXPECT_TRUE(close(i.im, Real(1L, bits), tol(55)));
  const Complex two = pow_principal(Complex(Real(4L, bits), Real(bits)), half);
  EXPECT_TRUE(close(two.re, Real(2L, bits), tol(55)));
  EXPECT_TRUE(two.im.is_zero());
  const Complex z = pow_principal(Complex(Real(-2L, bits), Real(bits)), Real::parse("0.25", bits));
  const Oracle m = boost::multiprecision::pow(Oracle(2), Oracle("0.25"));
  const Oracle r = m * cos(boost::math::constants::pi<Oracle>() / 4);
  EXPECT_TRUE(close(z.re, r, tol(55)));
  EXPECT_TRUE(close(z.im, r, tol(55)));
  EXPECT_THROW(pow_principal(Complex(Real(bits), Real(bits)), Real(-1L, bits)), DomainError);
}

TEST(PowPrincipal, PositiveRealMatchesRealPower) {
  const Bits bits = 200;
  for (const char* t : {"0.3", "2", "17.25"}) {
    const Real x = Real::parse(t, bits);
    const Real w = Real::parse("0.125", bits);
    const Complex z = pow_principal(Complex(x, Real(bits)), w);
    EXPECT_EQ(z.re, exp(w * log(x)));
    EXPECT_TRUE(z.im.is_zero());
  }
}

TEST(ComplexArg, PrincipalRange) {
  const Bits bits = 100;
  EXPECT_TRUE(close(arg(Complex(Real(-1L, bits), Real(bits))), pi(bits), tol(28)));
  EXPECT_TRUE(close(arg(Complex(Real(-1L, bits), Real(-1L, bits))), -3L * pi(bits) / 4L, tol(28)));
}

TEST(Concurrency, ElementaryIsDeterministicAcrossThreads) {
  const PrecisionContext c = ctx(60);
  const Real expected = elementary(ElementaryFn::tan, Real::parse("1.25", 400), c);
  std::vector<std::thread> threads;
  std::vector<Real> got(4);
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] { got[t] = elementary(ElementaryFn::tan, Real::parse("1.25", 400), c); });
  }
  for (auto& t : threads) t.join();
  for (const Real& g : got) EXPECT_EQ(g, expected);
}

}  // namespace
}  // namespace sincprod
