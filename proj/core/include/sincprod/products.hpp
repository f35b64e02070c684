#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sincprod/exact_argument.hpp"
#include "sincprod/precision.hpp"
#include "sincprod/real.hpp"
#include "sincprod/report.hpp"

// Product and finite-sum identities built on tan(x) = 2 sin^2 x / sin 2x and
// its base-q relatives. Infinite products are summed as logarithms with sign
// tracking; finite identities are evaluated directly at working precision.
namespace sincprod {

// Throws ExceptionalPoint (with a redirect to cpodd/peo2) when a is a nonzero
// integer multiple of pi.
void require_not_pi_multiple(const ExactArgument& a, std::string_view identity);

// prod_{j>=1} (tan(a/2^j) 2^j / a)^(2^(j-1)) against a / sin a.
VerificationReport vsum2_product(const ExactArgument& a, const PrecisionContext& ctx);
// prod_{j>=1} (2^j tanh(b/2^j) / b)^(2^(j-1)) against b / sinh b.
VerificationReport vsum2a_hyperbolic(const Real& b, const PrecisionContext& ctx);
// prod_{j>=1} (cot(a/2^j) a / 2^j)^(2^(j-1)) against sin a / a.
VerificationReport sinc_cot_product(const ExactArgument& a, const PrecisionContext& ctx);
// J-term partial products of the tan and cot forms multiplied together,
// against 1. The cot factors are computed independently, not as reciprocals.
VerificationReport reciprocity_check(const ExactArgument& a, int terms, const PrecisionContext& ctx);

// prod_{j>=2} (tan((2n-1)pi/2^j) 2^j / ((2n-1)pi))^(2^(j-1)) against pi^2 (1/2 - n)^2.
VerificationReport cpodd_product(long n, const PrecisionContext& ctx);
// prod_{j>=m+2} (tan(2^(m-j)(2n-1)pi) / (2^(m-j)(2n-1)pi))^(2^(j-1))
// against ((2n-1)pi/2)^(2^(m+1)).
VerificationReport peo2_product(long m, long n, const PrecisionContext& ctx);
// 2 tan((2n+2eps-1)pi/2) / ((2n+2eps-1)pi) against -2 / (pi^2 (2n-1) eps);
// passes within relative 1e-3.
VerificationReport cp1_check(long n, const Real& eps, const PrecisionContext& ctx);

struct EpsilonScalingRow {
  Real eps;
  Real partial;           // j = 1..m factors at a = 2^(m+eps)(2n-1)pi
  Real partial_model;     // (eps ln2)^(2^m - 1)
  Real divergent;         // the j = m+1 factor
  Real divergent_model;   // (4 / (ln2 (2n-1)^2 pi^2 eps))^(2^m), negative when m = 0
  Real combined;          // partial * divergent
  Real cp1;               // first-factor pole law, see cp1_check
  Real cp1_model;
};

struct EpsilonScalingStudy {
  long m = 0;
  long n = 1;
  std::vector<EpsilonScalingRow> rows;
  // Least-squares slope of ln|combined| against ln eps; lhs = slope, rhs = -1,
  // threshold 0.05.
  VerificationReport slope;
  // Pole law at the smallest eps, relative threshold 1e-3.
  VerificationReport cp1;
};

// Requires at least two eps values, each in (0, 1e-3]; DomainError otherwise.
EpsilonScalingStudy epsilon_scaling_study(long m, long n, const std::vector<Real>& eps, const PrecisionContext& ctx);

// prod_{j>=n+1} (2^(j-n)/a tan(2^(n-j) a))^(2^(j-1)) against a^(2^n) / sin^(2^n) a.
VerificationReport gp1b_product(long n, const ExactArgument& a, const PrecisionContext& ctx);
// The induction step: the (n+1, a/2) product times the extracted factor
// (2 tan(a/2) / a)^(2^n), against a^(2^n) (2 cos(a/2) sin(a/2))^(-2^n). The
// direct (n, a) product is attached as the extra "direct_deviation".
VerificationReport gp1b_induction_step(long n, const ExactArgument& a, const PrecisionContext& ctx);

// prod_{j=n1+1}^{n2} (2^j/a tan(a/2^j))^(2^(j-1)) against
// a^(N1-N2) 2^(-N1 n1 + N2 n2) sin^N2(a/N2) / sin^N1(a/N1), N_i = 2^n_i.
// Requires 0 <= n1 < n2 <= 24.
VerificationReport finite_p5_product(long n1, long n2, const ExactArgument& a, const PrecisionContext& ctx);
// tan a tan^2(a/2) tan^4(a/4) tan^8(a/8) against 2^15 sin^16(a/8) / sin 2a.
VerificationReport x1_identity(const ExactArgument& a, const PrecisionContext& ctx);
// sin 2a (sin a / cos a) tan^2(a/2) tan^4(a/4) tan^8(a/8) against 2^15 sin^16(a/8).
VerificationReport x1a_identity(const ExactArgument& a, const PrecisionContext& ctx);
// tan(a/2^(n+1)) against 2 sin^2(a/2^(n+1)) / sin(a/2^n).
VerificationReport x1b_identity(long n, const ExactArgument& a, const PrecisionContext& ctx);
// sin a against 2 cos(a/2) sin(a/2).
VerificationReport sin2a_identity(const ExactArgument& a, const PrecisionContext& ctx);

// N-plication products for sin(a)/a.
enum class NplicationForm {
  g2a,   // prod_{j>=0} (1/N) sum_{n=1}^N cos((2n-1) a / (2N)^(1+j))
  g2x,   // prod_{j>=0} (1 + 2 sum_{n=1}^N cos(2n a / (2N+1)^(1+j))) / (2N+1)
  gn1,   // prod_{j>=0} cos(a / 2^(1+j))
  gn4a,  // prod_{j>=0} (cos(a/4^(1+j)) + cos(3a/4^(1+j))) / 2
  gn3ca, // prod_{j>=0} (1 + 2 cos(2a/3^(1+j))) / 3
  gn3ci, // prod_{j>=1} (1 - 4 sin^2(a/3^j) / 3)
  gn5b,  // prod_{j>=0} (1 + 2 cos(2a/5^(1+j)) + 2 cos(4a/5^(1+j))) / 5
};

std::string_view to_string(NplicationForm form);
// Base of the contraction, q = 2N (even family) or 2N+1 (odd family).
long nplication_base(NplicationForm form, long N);
// The literal form for base q: 2 -> gn1, 3 -> gn3ca, 4 -> gn4a, 5 -> gn5b,
// other even q -> g2a, other odd q -> g2x. Throws DomainError for q < 2.
NplicationForm nplication_form_for_base(long q);
// The j-th factor (j counts from the form's first index).
Real nplication_factor(NplicationForm form, long N, long j, const ExactArgument& a, Bits bits);
// N is ignored by the fixed-base forms. Throws ExceptionalPoint for nonzero
// integer multiples of pi.
VerificationReport nplication_product(NplicationForm form, long N, const ExactArgument& a,
                                      const PrecisionContext& ctx);
// Base-q product in its literal form, with the general g2a/g2x form
// evaluated alongside (extra "general_deviation").
VerificationReport nplication_by_base(long q, const ExactArgument& a, const PrecisionContext& ctx);
// Largest |gn3ca factor j - gn3ci factor j+1| over j < terms, against 0.
VerificationReport gn3c_factor_agreement(const ExactArgument& a, int terms, const PrecisionContext& ctx);
// sqrt(2)/2 * sqrt(2+sqrt(2))/2 * ... against 2/pi, built from nested radicals;
// extra "max_cos_deviation" compares factor j with cos(pi/2^(j+2)).
VerificationReport viete_product(const PrecisionContext& ctx);

enum class Family { even, odd };

// even: sum_{n=1}^N cos((2n-1)a/(2N)^(1+j)) against sin(a/(2N)^j) / (2 sin(a/(2N)^(1+j)))
// odd:  sum_{n=1}^N cos(2n a/(2N+1)^(1+j)) against sin(a/(2N+1)^j) / (2 sin(a/(2N+1)^(1+j))) - 1/2
VerificationReport cosine_sum_lemma(Family family, long N, long j, const ExactArgument& a,
                                    const PrecisionContext& ctx);

struct TelescopingRow {
  long j = 0;
  Real factor;             // sin(a/q^j) / (q sin(a/q^(j+1)))
  Real nplication_factor;  // (1 + 2 sum cos(2n a/q^(1+j))) / q
  Real cumulative;         // product of factors 0..j
  Real closed_form;        // sin a / (q^(j+1) sin(a/q^(j+1)))
  Real limit_ratio;        // q^(j+1) sin(a/q^(j+1)) / a
};

struct TelescopingTrace {
  long N = 1;
  ExactArgument a;
  std::vector<TelescopingRow> rows;
  Real max_factor_deviation;      // |factor - nplication_factor|
  Real max_cumulative_deviation;  // |cumulative - closed_form|
};

// Odd family, q = 2N+1, rows j = 0..J. Throws DomainError at zero denominators.
TelescopingTrace telescoping_trace(long N, const ExactArgument& a, long J, const PrecisionContext& ctx);

// prod_{j=0}^{k-1} cos(2^j a) against sin(2^k a) / (2^k sin a), with a
// relative threshold. The product is recomputed at doubled digits; extra
// "doubled_precision_deviation" holds the relative difference.
// Throws DomainError when sin a = 0.
VerificationReport br114_finite(const ExactArgument& a, long k, const PrecisionContext& ctx);

// (prod_{j=1}^{n-1} tan(pi j/(2n)))^(1/n) against 1. The printed upper limit n
// would include the pole tan(pi/2). Requires n >= 2.
VerificationReport jo1_product(long n, const PrecisionContext& ctx);
// prod_{j=1}^{2k-1} cos(pi j/k) against ((-1)^k - 1) / 2^(2k-1). Exact zero
// factors are listed in the extra "zero_factors". Requires k >= 1.
VerificationReport jo2_product(long k, const PrecisionContext& ctx);

// prod_{j=1}^{terms} (1 - a^2/(pi^2 j^2)) against sin(a)/a. tail_bound is the
// estimate |P| a^2 / (pi^2 terms); the verdict is inconclusive whenever that
// estimate exceeds the tolerance. A vanishing factor is reported by index.
VerificationReport euler_sine_product(const ExactArgument& a, long terms, const PrecisionContext& ctx);

// sum_{j>=1} (2^(j-1) - a / sin(a/2^(j-1))) against a cot a - 1.
VerificationReport vsum3_sum(const ExactArgument& a, const PrecisionContext& ctx);
// sum_{j=0}^n 1/sin(x/2^j) against cot(x/2^(n+1)) - cot x.
VerificationReport h25_sum(const ExactArgument& x, long n, const PrecisionContext& ctx);
// sum_{j=0}^n (2^j - a/sin(a/2^j)) against 2^(n+1) - 1 - a (cot(a/2^(n+1)) - cot a);
// the integer identity sum 2^j = 2^(n+1) - 1 is checked exactly.
VerificationReport also_identity(long n, const ExactArgument& a, const PrecisionContext& ctx);
// sum_{j>=1} (2 ln2 - psi(1 + a/2^j) + psi(a/2^j + 1/2)) against 2 psi(a+1) + 2 gamma.
// Requires a > -1.
VerificationReport r1bd_sum(const Real& a, const PrecisionContext& ctx);
// sum_{j>=0} 3^-(1+j) (3 ln3 + psi(a/3^(1+j) + 1/3) + psi(a/3^(1+j) + 2/3))
// against psi(a+1). Requires a > -1.
VerificationReport gn3ad_sum(const Real& a, const PrecisionContext& ctx);

}  // namespace sincprod
