#pragma once

#include "sincprod/precision.hpp"
#include "sincprod/real.hpp"

// Gamma-family and zeta-family functions on the positive axis.
//
// Every function here returns its value at ctx.working_bits(), or at the
// argument's own precision when that is larger; callers that need extra
// headroom (sums whose terms are multiplied by 2^j) pass a more precise
// argument. The Bits overloads compute at exactly that precision.
namespace sincprod {

// ln Gamma(x) for x > 0, by upward shifting and the Stirling series.
// Throws DomainError for x <= 0.
Real lngamma(const Real& x, const PrecisionContext& ctx);
Real lngamma(const Real& x, Bits bits);

// psi(x) = d/dx ln Gamma(x) for x > 0. Throws DomainError for x <= 0.
Real digamma(const Real& x, const PrecisionContext& ctx);
Real digamma(const Real& x, Bits bits);

// eta(n) = sum_{k>=0} (-1)^k / (k+1)^n via the Cohen-Villegas-Zagier
// accelerated alternating sum; zeta(n) = eta(n) / (1 - 2^(1-n)).
// Throws DomainError for n < 2.
Real eta_int(long n, const PrecisionContext& ctx);
Real eta_int(long n, Bits bits);
Real zeta_int(long n, const PrecisionContext& ctx);
Real zeta_int(long n, Bits bits);

Real euler_gamma(const PrecisionContext& ctx);
Real pi_constant(const PrecisionContext& ctx);
Real ln2_constant(const PrecisionContext& ctx);
Real ln3_constant(const PrecisionContext& ctx);

// Bernoulli number B_{2k} (exact); the table grows on demand under a lock.
mpq_class bernoulli_even(int k);

}  // namespace sincprod
