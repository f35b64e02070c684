#pragma once

#include <vector>

#include "sincprod/complex.hpp"
#include "sincprod/exact_argument.hpp"
#include "sincprod/precision.hpp"
#include "sincprod/real.hpp"
#include "sincprod/report.hpp"

// The Dobinski product with principal-branch factors and the limit anatomy
// of prod cos(2^j a) = sin(2^k a) / (2^k sin a).
namespace sincprod {

struct DobinskiRow {
  long j = 0;
  Real tan_value;             // tan(2^j a)
  bool complex_branch = false;  // tan < 0, so the factor is complex
  Complex factor;             // tan(2^j a)^(2^-j), principal branch
  Complex partial;            // P_j, product of factors 0..j
  Real target_deviation;      // |P_j - 4 sin^2 a|
  Complex closure;            // P_j (2 sin(2^(j+1) a))^(2^-j)
  Real closure_deviation;     // |closure - 4 sin^2 a|
  // Phase picked up by the principal branches; closure = 4 sin^2 a e^(i phase).
  Real phase;
  Real branch_closure_deviation;  // |closure - 4 sin^2 a e^(i phase)|
  Complex agnew_walker;       // s_j = sin(2^(1+j) a)^(2^-j)
};

struct DobinskiTrace {
  ExactArgument a;
  Real target;  // 4 sin^2 a
  std::vector<DobinskiRow> rows;
  Real max_branch_closure_deviation;
};

// Rows j = 0..J. Throws DomainError at the dyadic poles a = (2n+1)pi/2^k and
// at integer multiples of pi (every partial product is then 0).
DobinskiTrace dobinski_evaluate(const ExactArgument& a, long J, const PrecisionContext& ctx);

// Closure at J with branch correction: lhs = P_J (2 sin(2^(J+1) a))^(2^-J),
// rhs = 4 sin^2 a e^(i phase). The literal deviation |lhs - 4 sin^2 a| is the
// extra "literal_deviation".
VerificationReport dobinski_closure_check(const ExactArgument& a, long J, const PrecisionContext& ctx);

struct AgnewWalkerRow {
  long j = 0;
  Complex s;  // sin(2^(1+j) a)^(2^-j)
  Real modulus;
  Real phase;
  Real deviation;  // |s - 1|
  bool near_one = false;
};

struct AgnewWalkerSequence {
  ExactArgument a;
  Real tolerance;
  std::vector<AgnewWalkerRow> rows;
  // The last row is within tolerance of 1.
  bool trailing_near_one = false;
};

AgnewWalkerSequence agnew_walker_condition(const ExactArgument& a, long J, const PrecisionContext& ctx,
                                           const Real& tolerance);
// | |s_J| - 1 | within 1e-3.
VerificationReport agnew_walker_check(const ExactArgument& a, long J, const PrecisionContext& ctx);

struct TrajectoryRow {
  long k = 0;
  Real lhs;  // prod_{j<k} cos(2^j a)
  Real rhs;  // sin(2^k a) / (2^k sin a)
  Real br114a;  // sin(a) lhs / sin(2^k a), NaN where sin(2^k a) = 0
  Real identity_deviation;  // |lhs - rhs| / |rhs|, or |lhs - rhs| when rhs = 0
  Real br114a_deviation;    // |2^k br114a - 1|
};

// Consecutive partial products with |P_k2 / P_k1 - 1| > 0.5 while both |P| < 1.
struct CauchyViolation {
  long k1 = 0;
  long k2 = 0;
  Real ratio;
};

struct LimitTrajectory {
  ExactArgument a;
  std::vector<TrajectoryRow> rows;
  std::vector<CauchyViolation> violations;
  Real max_identity_deviation;
  Real max_br114a_deviation;
  bool br114a_decreasing = true;
};

// Rows k = 1..k_max. Reduction of 2^k a needs ctx.reduction_digits(2, k_max)
// digits; beyond 4 * ctx.digits the call is refused with DomainError unless
// allow_expensive is set. Throws DomainError when sin a = 0.
LimitTrajectory weierstrass_trajectory(const ExactArgument& a, long k_max, const PrecisionContext& ctx,
                                       bool allow_expensive = false);

// Start indices of the length-`window` blocks 1.., window+1.., ... that hold
// no Cauchy violation (k1 inside the block).
std::vector<long> windows_without_violation(const LimitTrajectory& trajectory, long window);

// Second central difference of prod_{j<k} cos(2^j a) at a = 2^n pi, step
// 10^-floor(digits/4), halved and divided by the center value, against
// (1 - 4^k)/6 with relative threshold 1e-6. Requires n >= 0, 1 <= k <= 12.
// At n = 0 the j = 0 factor is cos(pi) = -1, so the expansion holds up to
// that overall sign; the extra "factors_unity" records whether every factor
// at the center is exactly 1.
VerificationReport case1_expansion_check(long n, long k, const PrecisionContext& ctx);

// prod_{j<k} cos(2^j pi/2^m) against sin(2^(k-m) pi) / (2^k sin(pi/2^m)); the
// vanishing factors must be exactly {m-1} when k >= m and none otherwise.
VerificationReport case2_zero_factor(long m, long k, const PrecisionContext& ctx);

// jo2 for even k: zero factors exactly at k/2 and 3k/2 and a zero right-hand
// side. Throws DomainError for odd k.
VerificationReport jo2_zero_anatomy(long k, const PrecisionContext& ctx);

}  // namespace sincprod
