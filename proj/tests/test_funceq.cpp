#include <boost/math/special_functions/gamma.hpp>
#include <random>

#include "sincprod/errors.hpp"
#include "sincprod/funceq.hpp"
#include "sincprod/special.hpp"
#include "support.hpp"

namespace sincprod {
namespace {

using namespace test;

Real solve(const FunceqProblem& p, const Real& a, const PrecisionContext& c) {
  return p.boundary == Boundary::f_inf_finite ? solve_expanding(p, a, c).value : solve_series(p, a, c).value;
}

TEST(Funceq, ToyClosedForms) {
  const PrecisionContext c = ctx(50);
  EXPECT_TRUE(close(solve_series(named_problem("geometric"), R("3"), c).value, Real(4L, 64), tol(40)));
  EXPECT_TRUE(close(solve_series(named_problem("square"), R("1"), c).value, Real(mpq_class(16, 15), 300), tol(40)));
  EXPECT_TRUE(close(solve_expanding(named_problem("reciprocal"), R("0.5"), c).value, Real(mpq_class(-2, 3), 300),
                    tol(40)));
  const Real a = R("1.7");
  EXPECT_TRUE(close(solve_expanding(named_problem("inverse_square"), a, c).value, Real(-1L, 300) / (31L * a * a),
                    tol(40)));
}

TEST(Funceq, ClosedFormTableMatchesSolver) {
  const PrecisionContext c = ctx(40);
  for (const std::string& name : named_problem_names()) {
    if (!has_closed_form(name)) continue;
    const FunceqProblem p = named_problem(name);
    for (const char* t : {"0.25", "1", "2.5"}) {
      EXPECT_TRUE(close(solve(p, R(t), c), closed_form(name, R(t), c), tol(30))) << name << " " << t;
    }
  }
}

TEST(Funceq, ExpDecayMatchesDirectSum) {
  const PrecisionContext c = ctx(50);
  const PartialEvaluation r = solve_expanding(named_problem("exp_decay"), R("1"), c);
  // Direct oracle: -sum_{j>=1} e^{-2^j} / 2^j, the terms die doubly exponentially.
  Oracle direct = 0;
  for (int j = 1; j < 12; ++j) {
    direct -= boost::multiprecision::exp(-boost::multiprecision::ldexp(Oracle(1), j)) /
              boost::multiprecision::ldexp(Oracle(1), j);
  }
  EXPECT_TRUE(close(r.value, direct, tol(34)));
  EXPECT_LT(r.terms_used, 10);
}

TEST(Funceq, FiniteUnrollingIsConsistent) {
  const PrecisionContext c = ctx(50);
  for (const char* name : {"geometric", "square", "duplication", "rs2"}) {
    const FunceqProblem p = named_problem(name);
    const Real a = R("0.7");
    const Real f = solve(p, a, c);
    for (long n : {1L, 5L, 20L}) {
      const FiniteExpansion e = expand_finite(p, a, n, c);
      const Real rebuilt = e.partial_sum + e.remainder_weight * solve(p, e.remainder_argument, c);
      EXPECT_TRUE(close(rebuilt, f, tol(38))) << name << " N=" << n;
    }
  }
}

TEST(Funceq, SingleUnrollingIsGAndX) {
  const PrecisionContext c = ctx(30);
  const FunceqProblem p = named_problem("square");
  const FiniteExpansion e = expand_finite(p, R("1.5"), 1, c);
  EXPECT_TRUE(close(e.partial_sum, R("2.25"), tol(28)));
  EXPECT_TRUE(close(e.remainder_weight, p.x, tol(28)));
  EXPECT_TRUE(close(e.remainder_argument, R("0.75"), tol(28)));
}

TEST(Funceq, SubstitutionIntoItself) {
  const PrecisionContext c = ctx(40);
  const FunceqProblem p = named_problem("square");
  const Real a = R("1.3");
  const FiniteExpansion e = expand_finite(p, a, 2, c);
  const Real manual = p.g(a) + p.x * p.g(a / p.p) + p.x * p.x * solve(p, a / (p.p * p.p), c);
  EXPECT_TRUE(close(e.partial_sum + e.remainder_weight * solve(p, e.remainder_argument, c), manual, tol(35)));
}

TEST(Funceq, DuplicationUnrollingApproachesLnGamma) {
  const PrecisionContext c = ctx(30);
  const FiniteExpansion e = expand_finite(named_problem("duplication"), R("0.5"), 30, c);
  EXPECT_TRUE(close(e.partial_sum, lngamma(R("1.5"), c), tol(8)));
}

TEST(Funceq, SolutionSatisfiesEquationAtRandomPoints) {
  const PrecisionContext c = ctx(40);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(0.05, 3.0);
  for (const char* name : {"geometric", "square", "reciprocal", "inverse_square", "exp_decay", "duplication"}) {
    const FunceqProblem p = named_problem(name);
    for (int i = 0; i < 5; ++i) {
      const Real a = Real::from_double(dist(rng), c.working_bits());
      const Real residual = solve(p, a, c) - p.x * solve(p, a / p.p, c) - p.g(a);
      EXPECT_TRUE(close(residual, Real(0L, 64), 4L * c.tail_tolerance))
          << name;
    }
  }
}

TEST(Funceq, Rs2SummandDecaysGeometrically) {
  const PrecisionContext c = ctx(40);
  const FunceqProblem p = named_problem("rs2");
  const Real a = R("0.9");
  Real prev;
  for (long j = 4; j < 40; ++j) {
    const Real term = abs(p.g(ldexp(a, -j).rounded(c.working_bits() + 4 * 40)));
    if (j > 4) EXPECT_LE(term, Real::parse("0.6", 64) * prev) << j;
    prev = term;
  }
}

TEST(Funceq, ValidationRejectsMismatchedBoundary) {
  FunceqProblem p = named_problem("geometric");
  p.boundary = Boundary::f_inf_finite;
  EXPECT_THROW(p.validate(), DomainError);
  p = named_problem("geometric");
  p.p = Real(1L, 64);
  EXPECT_THROW(p.validate(), DomainError);
  EXPECT_THROW(named_problem("nope"), DomainError);
}

TEST(Funceq, UserCallableErrorsBecomeEvaluationErrors) {
  FunceqProblem p = named_problem("geometric");
  p.g = [](const Real&) -> Real { throw std::runtime_error("boom"); };
  EXPECT_THROW(expand_finite(p, R("1"), 3, ctx()), EvaluationError);
}

TEST(Funceq, NoConvergenceWhenTermsRunOut) {
  PrecisionContext c = ctx(50);
  c.max_terms = 3;
  EXPECT_THROW(solve_series(named_problem("geometric"), R("1"), c), NoConvergence);
}

TEST(GammaApplications, Rs2AndR0a) {
  const PrecisionContext c = ctx(50);
  const Real gamma = euler_gamma(c);
  const PartialEvaluation s = rs2_sum(R("0.5"), c);
  EXPECT_TRUE(close(s.value, -gamma - 2L * lngamma(R("1.5"), c), tol(38)));
  EXPECT_TRUE(rs2_check(R("0.5"), c).passed());

  const VerificationReport zero = r0a_product_check(R("0"), c);
  EXPECT_TRUE(zero.passed());
  EXPECT_TRUE(close(rhs_real(zero), Real(1L, 64), tol(49)));
  const VerificationReport quarter = r0a_product_check(R("0.25"), c);
  EXPECT_TRUE(quarter.passed());
  EXPECT_EQ(lhs_real(quarter).to_string(7), "0.7493060");
  EXPECT_TRUE(close(rhs_real(quarter), exp(-gamma / 2L), tol(48)));
  EXPECT_TRUE(r0a_product_check(R("0.9"), c).passed());
  EXPECT_THROW(r0a_product_check(R("-0.75"), c), DomainError);
}

TEST(GammaApplications, EtaAndZetaSeries) {
  const PrecisionContext c = ctx(50);
  const VerificationReport eta = eta_series_check(R("0.5"), c);
  EXPECT_TRUE(eta.passed());
  EXPECT_EQ(rhs_real(eta).to_string(8), "-0.15152287");
  EXPECT_TRUE(eta_series_check(R("-0.5"), c).passed());
  EXPECT_TRUE(eta_series_check(R("0"), c).passed());

  const VerificationReport zeta = zeta_series_check(R("0.5"), c);
  EXPECT_TRUE(zeta.passed());
  EXPECT_EQ(rhs_real(zeta).to_string(10), "-0.3356511896");
  // Independent RHS from Boost: -lnGamma(1.5)/0.5 - gamma
  const Oracle rhs = -boost::math::lgamma(Oracle("1.5")) * 2 - boost::math::constants::euler<Oracle>();
  EXPECT_TRUE(close(lhs_real(zeta), rhs, tol(30)));
  EXPECT_TRUE(cm1b_split_check(R("0.6"), c).passed());
  EXPECT_THROW(eta_series_check(R("1"), c), DomainError);
  EXPECT_THROW(zeta_series_check(R("-1.5"), c), DomainError);
}

TEST(GammaApplications, DuplicationAndGaussMultiplication) {
  const PrecisionContext c = ctx(50);
  for (const char* t : {"-0.5", "0.1", "3.7"}) EXPECT_TRUE(duplication_check(R(t), c).passed()) << t;
  for (long n = 1; n <= 7; ++n) EXPECT_TRUE(gauss_multiplication_check(n, R("0.35"), c).passed()) << n;
  EXPECT_THROW(duplication_check(R("-1"), c), DomainError);
  EXPECT_THROW(gauss_multiplication_check(3, R("0"), c), DomainError);
}

}  // namespace
}  // namespace sincprod
