#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "sincprod/precision.hpp"
#include "sincprod/real.hpp"
#include "sincprod/report.hpp"
#include "sincprod/truncation.hpp"

// Expansion of f(a) = g(a) + x f(a / p) into finite unrollings and infinite
// series, and the Gamma / eta / zeta identities that come out of it.
namespace sincprod {

enum class Boundary {
  f0_finite,     // |x| < 1, f(0) finite
  f0_zero,       // x = 1, f(0) = 0
  f_inf_finite,  // x > 1, f(infinity) finite; solved by reversal
};

std::string_view to_string(Boundary boundary);

struct FunceqProblem {
  // Recorded in reports so a number can be traced back to its application.
  std::string label;
  // Must be free of side effects. Evaluates at the precision of its argument.
  std::function<Real(const Real&)> g;
  Real x;
  Real p;
  Boundary boundary = Boundary::f0_finite;
  // Extra bits given to the argument of the j-th term, per step, when g
  // loses digits near 0 (for example g(y) = u(y)/y).
  int bits_per_step = 0;

  // Throws DomainError unless p > 1 and the boundary mode matches x.
  void validate() const;
};

struct FiniteExpansion {
  Real partial_sum;         // sum_{j<N} x^j g(a / p^j)
  Real remainder_weight;    // x^N
  Real remainder_argument;  // a / p^N
};

// N-fold unrolling; f(a) = partial_sum + remainder_weight * f(remainder_argument).
// Exceptions thrown by g are rethrown as EvaluationError.
FiniteExpansion expand_finite(const FunceqProblem& problem, const Real& a, long n, const PrecisionContext& ctx);

// sum_{j>=0} x^j g(a / p^j). Requires boundary f0_finite or f0_zero.
PartialEvaluation solve_series(const FunceqProblem& problem, const Real& a, const PrecisionContext& ctx);

// -sum_{j>=1} g(p^j a) / x^j. Requires boundary f_inf_finite.
PartialEvaluation solve_expanding(const FunceqProblem& problem, const Real& a, const PrecisionContext& ctx);

// Toy problems with closed forms plus the Gamma applications:
//   geometric        g = a,      x = 1/2, p = 2   f = 4a/3
//   square           g = a^2,    x = 1/4, p = 2   f = 16a^2/15
//   reciprocal       g = 1/a,    x = 2,   p = 2   f = -1/(3a)
//   inverse_square   g = 1/a^2,  x = 8,   p = 2   f = -1/(31 a^2)
//   exp_decay        g = e^-a,   x = 2,   p = 2
//   duplication      g = a ln2 - ln(pi)/2 + lnGamma(a/2 + 1/2), x = 1, p = 2;
//                    f = lnGamma(1 + a)
//   rs2              g = u(a)/a with u(y) = ln(pi)/2 + lnGamma(y+1)
//                    - lnGamma(y+1/2) - 2y ln2, x = 1, p = 2
FunceqProblem named_problem(std::string_view name);
std::vector<std::string> named_problem_names();

// Closed form of a toy problem at a, when one exists.
bool has_closed_form(std::string_view name);
Real closed_form(std::string_view name, const Real& a, const PrecisionContext& ctx);

// sum_{j>=1} [2^j ln(Gamma(a/2^j + 1)/Gamma(a/2^j + 1/2)) + 2^(j-1) ln pi - 2a ln2]
PartialEvaluation rs2_sum(const Real& a, const PrecisionContext& ctx);

// rs2_sum(a) + 2 lnGamma(a + 1) against -2 gamma a. Requires a > -1/2.
VerificationReport rs2_check(const Real& a, const PrecisionContext& ctx);

// Gamma(1+2a) prod_{j>=0} 2^(-2a) (sqrt(pi) Gamma(a/2^j+1)/Gamma(a/2^j+1/2))^(2^j)
// against exp(-2 gamma a), evaluated through logarithms. Requires a > -1/2.
VerificationReport r0a_product_check(const Real& a, const PrecisionContext& ctx);

// sum_{j>=1} eta(1+j) (-a)^j / (1+j) against
// (1/a) ln(sqrt(pi) Gamma(a/2+1) / (Gamma(a/2+1/2) 2^a)). Requires |a| < 1;
// a = 0 is a trivial pass.
VerificationReport eta_series_check(const Real& a, const PrecisionContext& ctx);

// sum_{j>=1} zeta(1+j) (-a)^j / (1+j) against -lnGamma(a+1)/a - gamma.
// Requires |a| < 1; a = 0 is a trivial pass.
VerificationReport zeta_series_check(const Real& a, const PrecisionContext& ctx);

// Splitting relation S(a) = R(a) + S(a/2), where S is the zeta series and R
// the right-hand side of the eta identity; three independent evaluations.
VerificationReport cm1b_split_check(const Real& a, const PrecisionContext& ctx);

// lnGamma(1+a) against a ln2 - ln(pi)/2 + lnGamma(a/2 + 1/2) + lnGamma(1 + a/2).
// Requires a > -1.
VerificationReport duplication_check(const Real& a, const PrecisionContext& ctx);

// lnGamma(n a) against ((1-n)/2) ln(2 pi) + (n a - 1/2) ln n + sum_k lnGamma(a + k/n).
// Requires n >= 1 and a > 0.
VerificationReport gauss_multiplication_check(long n, const Real& a, const PrecisionContext& ctx);

}  // namespace sincprod
