#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include "sincprod/errors.hpp"
#include "sincprod/special.hpp"
#include "support.hpp"

namespace sincprod {
namespace {

using namespace test;

// Oracle values use Boost.Math at roughly 36 digits, so compare at 30.
const char* const kPoints[] = {"0.001", "0.5", "1", "1.5", "2", "3.25", "10", "57.5", "1000.125"};

TEST(LnGamma, KnownValue) {
  EXPECT_EQ(lngamma(R("1.5"), ctx(20)).to_string(10), "-0.1207822376");
  EXPECT_TRUE(lngamma(R("1"), ctx()).is_zero() || abs(lngamma(R("1"), ctx())) < tol(55));
  EXPECT_TRUE(close(lngamma(R("0.5"), ctx()), log(sqrt(pi(400))), tol(49)));
}

TEST(LnGamma, AgreesWithBoost) {
  for (const char* t : kPoints) {
    EXPECT_TRUE(close_rel(lngamma(R(t), ctx(50)), from_oracle(boost::math::lgamma(oracle(t))), tol(30))) << t;
  }
}

TEST(LnGamma, RecurrenceHoldsAtFullPrecision) {
  const PrecisionContext c = ctx(60);
  for (const char* t : kPoints) {
    const Real x = R(t, 500);
    EXPECT_TRUE(close(lngamma(x + 1L, c) - lngamma(x, c), log(x), tol(58))) << t;
  }
}

TEST(LnGamma, DomainErrorsAtNonPositiveArguments) {
  EXPECT_THROW(lngamma(R("0"), ctx()), DomainError);
  EXPECT_THROW(lngamma(R("-1.5"), ctx()), DomainError);
}

TEST(Digamma, KnownValues) {
  const PrecisionContext c = ctx(50);
  EXPECT_TRUE(close(digamma(R("1"), c), -euler_gamma(c), tol(49)));
  // psi(1/2) = -gamma - 2 ln 2
  EXPECT_TRUE(close(digamma(R("0.5"), c), -euler_gamma(c) - 2L * ln2_constant(c), tol(49)));
  EXPECT_THROW(digamma(R("0"), c), DomainError);
}

TEST(Digamma, AgreesWithBoost) {
  for (const char* t : kPoints) {
    EXPECT_TRUE(close_rel(digamma(R(t), ctx(50)), from_oracle(boost::math::digamma(oracle(t))), tol(30))) << t;
  }
}

TEST(Digamma, MatchesFiniteDifferenceOfLnGamma) {
  const PrecisionContext c = ctx(60);
  const Real h = R("1e-15", 600);
  for (const char* t : {"0.75", "4.5"}) {
    const Real x = R(t, 600);
    const Real fd = (lngamma(x + h, c) - lngamma(x - h, c)) / (2L * h);
    EXPECT_TRUE(close(fd, digamma(x, c), tol(25))) << t;
  }
}

TEST(Zeta, KnownValues) {
  const PrecisionContext c = ctx(50);
  EXPECT_EQ(zeta_int(3, ctx(20)).to_string(15), "1.20205690315959");
  const Real pi2 = pi_constant(c) * pi_constant(c);
  EXPECT_TRUE(close(zeta_int(2, c), pi2 / 6L, tol(49)));
  EXPECT_TRUE(close(zeta_int(4, c), pi2 * pi2 / 90L, tol(49)));
  EXPECT_TRUE(close(eta_int(2, c), pi2 / 12L, tol(49)));
  EXPECT_THROW(zeta_int(1, c), DomainError);
  EXPECT_THROW(eta_int(0, c), DomainError);
}

TEST(Zeta, AgreesWithBoostAndMpfr) {
  for (long n = 2; n <= 40; ++n) {
    const Real z = zeta_int(n, ctx(50));
    const Oracle o = boost::math::zeta(Oracle(n));
    EXPECT_TRUE(close_rel(z, from_oracle(o), tol(30))) << n;
    Real ref(bits_for_digits(70));
    mpfr_zeta_ui(ref.get(), static_cast<unsigned long>(n), MPFR_RNDN);
    EXPECT_TRUE(close_rel(z, ref, tol(48))) << n;
    const Oracle eta = (1 - boost::multiprecision::pow(Oracle(2), Oracle(1 - n))) * o;
    EXPECT_TRUE(close_rel(eta_int(n, ctx(50)), from_oracle(eta), tol(30))) << n;
  }
}

TEST(Constants, AgreeWithBoost) {
  const PrecisionContext c = ctx(50);
  EXPECT_TRUE(close(euler_gamma(c), boost::math::constants::euler<Oracle>(), tol(49)));
  EXPECT_TRUE(close(ln2_constant(c), boost::math::constants::ln_two<Oracle>(), tol(49)));
  EXPECT_TRUE(close(ln3_constant(c), boost::multiprecision::log(Oracle(3)), tol(49)));
  EXPECT_TRUE(close(pi_constant(c), boost::math::constants::pi<Oracle>(), tol(49)));
}

TEST(Bernoulli, ExactValues) {
  EXPECT_EQ(bernoulli_even(0), mpq_class(1));
  EXPECT_EQ(bernoulli_even(1), mpq_class(1, 6));
  EXPECT_EQ(bernoulli_even(2), mpq_class(-1, 30));
  EXPECT_EQ(bernoulli_even(6), mpq_class(-691, 2730));
  EXPECT_EQ(bernoulli_even(10), mpq_class(-174611, 330));
}

TEST(Precision, HigherDigitsRefineLowerDigits) {
  for (const char* t : {"0.3", "7.5"}) {
    EXPECT_TRUE(close(lngamma(R(t, 800), ctx(40)), lngamma(R(t, 800), ctx(200)), tol(39))) << t;
  }
  EXPECT_TRUE(close(zeta_int(5, ctx(40)), zeta_int(5, ctx(200)), tol(39)));
}

}  // namespace
}  // namespace sincprod
