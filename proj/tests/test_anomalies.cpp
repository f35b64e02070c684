#include "sincprod/anomalies.hpp"
#include "sincprod/errors.hpp"
#include "support.hpp"

namespace sincprod {
namespace {

using namespace test;
using boost::multiprecision::sin;

ExactArgument A(const char* text) { return ExactArgument::parse(text); }

Real four_sin_squared(const char* a) {
  const Oracle s = sin(oracle(a));
  return from_oracle(4 * s * s);
}

TEST(Dobinski, ClosureHoldsAtEveryJ) {
  const PrecisionContext c = ctx(50);
  const DobinskiTrace t = dobinski_evaluate(A("1"), 20, c);
  ASSERT_EQ(t.rows.size(), 21u);
  EXPECT_TRUE(close(t.target, four_sin_squared("1"), tol(45)));
  EXPECT_EQ(t.target.to_string(11), "2.8322936731");
  EXPECT_LE(t.max_branch_closure_deviation, tol(40));
  for (const DobinskiRow& row : t.rows) EXPECT_LE(row.branch_closure_deviation, tol(40)) << row.j;
  EXPECT_TRUE(dobinski_closure_check(A("1"), 20, c).passed());
}

TEST(Dobinski, ClosureModulusIsTheTarget) {
  const PrecisionContext c = ctx(50);
  const DobinskiTrace t = dobinski_evaluate(A("0.3"), 30, c);
  for (const DobinskiRow& row : t.rows) {
    EXPECT_TRUE(close(abs(row.closure), four_sin_squared("0.3"), tol(40))) << row.j;
    EXPECT_TRUE(row.target_deviation.is_finite());
  }
}

TEST(Dobinski, PiThirdCyclesThroughComplexFactors) {
  const PrecisionContext c = ctx(50);
  const DobinskiTrace t = dobinski_evaluate(A("pi/3"), 12, c);
  for (const DobinskiRow& row : t.rows) {
    EXPECT_TRUE(close(abs(row.tan_value), sqrt(Real(3L, 300)), tol(45)));
    EXPECT_EQ(row.complex_branch, row.j % 2 == 1) << row.j;
    EXPECT_EQ(row.factor.im.is_zero(), !row.complex_branch);
  }
  EXPECT_LE(t.max_branch_closure_deviation, tol(40));
}

TEST(Dobinski, RejectsPolesAndPiMultiples) {
  const PrecisionContext c = ctx();
  EXPECT_THROW(dobinski_evaluate(A("3/8*pi"), 5, c), DomainError);
  EXPECT_THROW(dobinski_evaluate(A("pi/2"), 5, c), DomainError);
  EXPECT_THROW(dobinski_evaluate(A("2*pi"), 5, c), DomainError);
}

TEST(AgnewWalker, ModulusTendsToOne) {
  const PrecisionContext c = ctx(50);
  const AgnewWalkerSequence s = agnew_walker_condition(A("1"), 20, c, R("1e-3"));
  ASSERT_EQ(s.rows.size(), 21u);
  EXPECT_TRUE(close(s.rows.back().modulus, Real(1L, 64), R("1e-4")));
  for (const AgnewWalkerRow& row : s.rows) {
    if (row.s.im.is_zero()) continue;
    // Negative sine: principal phase pi 2^-j.
    EXPECT_TRUE(close(abs(row.phase), ldexp(pi(300), -row.j), tol(40))) << row.j;
  }
  EXPECT_TRUE(agnew_walker_check(A("1"), 20, c).passed());
}

TEST(Weierstrass, TrajectoryColumns) {
  const PrecisionContext c = ctx(50);
  const LimitTrajectory t = weierstrass_trajectory(A("1"), 60, c);
  ASSERT_EQ(t.rows.size(), 60u);
  EXPECT_LE(t.max_identity_deviation, tol(40));
  EXPECT_LE(t.max_br114a_deviation, tol(40));
  EXPECT_TRUE(t.br114a_decreasing);
  EXPECT_EQ(t.rows[9].k, 10);
  EXPECT_TRUE(close(t.rows[9].br114a, R("0.0009765625"), tol(48)));
  EXPECT_FALSE(t.violations.empty());
  for (const CauchyViolation& v : t.violations) EXPECT_EQ(v.k2, v.k1 + 1);
}

TEST(Weierstrass, RefusesExpensiveReductionsUnlessAllowed) {
  const PrecisionContext c = ctx(20);
  EXPECT_THROW(weierstrass_trajectory(A("1"), 400, c), DomainError);
  EXPECT_NO_THROW(weierstrass_trajectory(A("1"), 400, c, true));
  EXPECT_THROW(weierstrass_trajectory(A("pi"), 10, c), DomainError);
}

// Empirical: violation pairs keep appearing in every window of 40 up to k = 200.
TEST(Weierstrass, CauchyViolationsInEveryWindow) {
  const PrecisionContext c = ctx(50);
  for (const char* a : {"1", "0.3", "665857/470832"}) {
    const LimitTrajectory t = weierstrass_trajectory(A(a), 200, c, true);
    EXPECT_LE(t.max_identity_deviation, tol(40)) << a;
    EXPECT_LE(t.max_br114a_deviation, tol(40)) << a;
    const std::vector<long> quiet = windows_without_violation(t, 40);
    EXPECT_TRUE(quiet.empty()) << a << ": " << quiet.size() << " window(s) without a violation, first at k = "
                               << (quiet.empty() ? 0 : quiet.front());
  }
}

TEST(Case1, QuadraticCoefficient) {
  const PrecisionContext c = ctx(50);
  for (long k = 1; k <= 6; ++k) {
    const VerificationReport r = case1_expansion_check(1, k, c);
    EXPECT_TRUE(r.passed()) << k;
    EXPECT_EQ(r.extra("factors_unity"), "true") << k;
  }
  const VerificationReport k3 = case1_expansion_check(2, 3, c);
  EXPECT_TRUE(close(rhs_real(k3), R("-10.5"), tol(45)));
  // Independence of n, including the sign-normalised n = 0.
  EXPECT_TRUE(close_rel(lhs_real(case1_expansion_check(0, 4, c)), lhs_real(case1_expansion_check(2, 4, c)), R("1e-6")));
  EXPECT_THROW(case1_expansion_check(1, 13, c), DomainError);
}

TEST(Case2, ZeroFactorAnatomy) {
  const PrecisionContext c = ctx(50);
  const VerificationReport z = case2_zero_factor(3, 5, c);
  EXPECT_TRUE(z.passed());
  EXPECT_EQ(z.extra("zero_factors"), "2");
  const VerificationReport nz = case2_zero_factor(3, 2, c);
  EXPECT_TRUE(nz.passed());
  EXPECT_EQ(nz.extra("zero_factors"), "");
  const Oracle pi8 = boost::math::constants::pi<Oracle>() / 8;
  EXPECT_TRUE(close(lhs_real(nz), sin(4 * pi8) / (4 * sin(pi8)), tol(45)));
  const VerificationReport one = case2_zero_factor(1, 1, c);
  EXPECT_TRUE(lhs_real(one).is_zero());
  for (long m = 1; m <= 8; ++m) {
    for (long k = 1; k <= 10; ++k) EXPECT_TRUE(case2_zero_factor(m, k, c).passed()) << m << "," << k;
  }
}

TEST(Jo2Zeros, EvenK) {
  const PrecisionContext c = ctx(50);
  EXPECT_EQ(jo2_zero_anatomy(2, c).extra("zero_factors"), "1,3");
  EXPECT_EQ(jo2_zero_anatomy(4, c).extra("zero_factors"), "2,6");
  const VerificationReport k6 = jo2_zero_anatomy(6, c);
  EXPECT_TRUE(k6.passed());
  EXPECT_TRUE(rhs_real(k6).is_zero());
  EXPECT_FALSE(k6.notes.empty());
  EXPECT_THROW(jo2_zero_anatomy(3, c), DomainError);
}

}  // namespace
}  // namespace sincprod
