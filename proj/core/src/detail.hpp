#pragma once

// Helpers shared by the identity evaluators. Not installed.

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

#include "sincprod/elementary.hpp"
#include "sincprod/errors.hpp"
#include "sincprod/exact_argument.hpp"
#include "sincprod/report.hpp"
#include "sincprod/truncation.hpp"

namespace sincprod::detail {

inline constexpr Bits kGuardBits = 16;

// Precision for a term whose rounding error is multiplied by 2^extra.
inline Bits amplified_bits(const PrecisionContext& ctx, long extra) {
  return ctx.working_bits() + kGuardBits + static_cast<Bits>(std::max(0L, extra));
}

inline Bits base_bits(const PrecisionContext& ctx) { return ctx.working_bits() + kGuardBits; }

inline mpq_class inverse_power(long q, long j) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(j));
  return mpq_class(mpz_class(1), den);
}

inline mpq_class power(long q, long j) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(j));
  return mpq_class(out);
}

inline Real trig(ElementaryFn fn, const ExactArgument& a, const mpq_class& scale, Bits bits) {
  return trig_scaled(fn, a, scale, bits);
}

inline KeyValues arg_param(const ExactArgument& a) { return {{"a", a.to_string()}}; }

inline std::string long_text(long v) { return std::to_string(v); }

// Runs a log-space product and folds NoConvergence into an inconclusive report.
inline VerificationReport product_report(std::string id, KeyValues params,
                                         const std::function<SignedLog(long)>& factor, long first, Value rhs,
                                         const PrecisionContext& ctx, TruncationRule rule = {}) {
  try {
    ProductEvaluation p = multiply_series(factor, first, ctx, rule);
    return make_report(std::move(id), std::move(params), p.value, std::move(rhs), ctx, p.log_sum.terms_used,
                       p.tail_bound);
  } catch (const NoConvergence& e) {
    return inconclusive_report(std::move(id), std::move(params), e.partial(), std::move(rhs), e.what());
  }
}

inline VerificationReport sum_report(std::string id, KeyValues params, const std::function<Real(long)>& term,
                                     long first, Value rhs, const PrecisionContext& ctx,
                                     TruncationRule rule = {}) {
  try {
    PartialEvaluation s = sum_series(term, first, ctx, rule);
    return make_report(std::move(id), std::move(params), s.value, std::move(rhs), ctx, s.terms_used,
                       s.tail_bound);
  } catch (const NoConvergence& e) {
    return inconclusive_report(std::move(id), std::move(params), e.partial(), std::move(rhs), e.what());
  }
}

// ln|x| scaled by 2^e, negative only when the power 2^e is odd (e = 0).
inline SignedLog powered_log(const Real& x, long e) {
  if (x.is_zero()) throw DomainError("zero factor in a log-space product");
  return SignedLog{ldexp(log(abs(x)), e), x.sign() < 0 && e == 0};
}

}  // namespace sincprod::detail
