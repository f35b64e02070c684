#include <string>

#include "detail.hpp"
#include "sincprod/products.hpp"
#include "sincprod/special.hpp"

namespace sincprod {

using detail::amplified_bits;
using detail::base_bits;
using detail::inverse_power;
using detail::trig;

namespace {

Real nonzero_sin(const ExactArgument& a, const mpq_class& scale, Bits bits) {
  Real s = trig(ElementaryFn::sin, a, scale, bits);
  if (s.is_zero()) throw DomainError("a sine in the denominator vanishes at a = " + a.to_string());
  return s;
}

void require_above_minus_one(const Real& a, const char* id) {
  if (!(a > -1L)) throw DomainError(std::string(id) + " requires a > -1 (digamma arguments must stay positive)");
}

}  // namespace

VerificationReport vsum3_sum(const ExactArgument& a, const PrecisionContext& ctx) {
  require_not_pi_multiple(a, "vsum3");
  if (a.is_zero()) {
    VerificationReport r = make_report("vsum3", detail::arg_param(a), Real(ctx.bits()), Real(ctx.bits()), ctx);
    r.notes.push_back("a = 0: every summand and the right-hand side vanish");
    return r;
  }
  const Bits bits = base_bits(ctx);
  const Real rhs = realize(a, bits) * trig(ElementaryFn::cot, a, 1, bits) - 1L;
  // 2^(j-1) - a/sin(a/2^(j-1)) cancels about j bits.
  auto term = [&](long j) {
    const Bits b = amplified_bits(ctx, j);
    return Real::power_of_two(j - 1, b) - realize(a, b) / nonzero_sin(a, inverse_power(2, j - 1), b);
  };
  return detail::sum_report("vsum3", detail::arg_param(a), term, 1, rhs, ctx);
}

VerificationReport h25_sum(const ExactArgument& x, long n, const PrecisionContext& ctx) {
  if (n < 0 || n > 100000) throw DomainError("h25 requires 0 <= n <= 100000");
  const Bits bits = base_bits(ctx);
  Real lhs(bits);
  for (long j = 0; j <= n; ++j) lhs += 1L / nonzero_sin(x, inverse_power(2, j), bits);
  const Real rhs = trig(ElementaryFn::cot, x, inverse_power(2, n + 1), bits) - trig(ElementaryFn::cot, x, 1, bits);
  return make_report("h25", {{"x", x.to_string()}, {"n", std::to_string(n)}}, lhs, rhs, ctx,
                     static_cast<int>(n + 1));
}

VerificationReport also_identity(long n, const ExactArgument& a, const PrecisionContext& ctx) {
  if (n < 0 || n > 100000) throw DomainError("also requires 0 <= n <= 100000");
  if (a.is_zero()) throw DomainError("also requires a nonzero argument");
  mpz_class powers = 0;
  for (long j = 0; j <= n; ++j) powers += detail::power(2, j).get_num();
  const mpz_class closed = detail::power(2, n + 1).get_num() - 1;

  const Bits bits = amplified_bits(ctx, n);
  const Real av = realize(a, bits);
  Real lhs(bits);
  for (long j = 0; j <= n; ++j) lhs += Real::power_of_two(j, bits) - av / nonzero_sin(a, inverse_power(2, j), bits);
  const Real rhs = Real(closed, bits) -
                   av * (trig(ElementaryFn::cot, a, inverse_power(2, n + 1), bits) - trig(ElementaryFn::cot, a, 1, bits));
  VerificationReport report =
      make_report("also", {{"n", std::to_string(n)}, {"a", a.to_string()}}, lhs, rhs, ctx, static_cast<int>(n + 1));
  report.add_extra("power_sum", powers.get_str());
  report.add_extra("power_sum_closed_form", closed.get_str());
  if (powers != closed) {
    report.verdict = Verdict::fail;
    report.notes.push_back("integer identity sum 2^j = 2^(n+1) - 1 failed");
  }
  return report;
}

VerificationReport r1bd_sum(const Real& a, const PrecisionContext& ctx) {
  require_above_minus_one(a, "r1bd");
  const Bits bits = base_bits(ctx);
  const Real x = a.rounded(std::max(a.precision(), bits));
  const Real rhs = 2L * digamma(x + 1L, bits) + 2L * euler_constant(bits);
  const Real two_ln2 = 2L * log2_constant(bits);
  const Real half = Real(1L, bits) / 2L;
  auto term = [&](long j) {
    const Real y = ldexp(x, -j);
    return two_ln2 - digamma(y + 1L, bits) + digamma(y + half, bits);
  };
  return detail::sum_report("r1bd", {{"a", a.to_string(ctx.digits)}}, term, 1, rhs, ctx);
}

VerificationReport gn3ad_sum(const Real& a, const PrecisionContext& ctx) {
  require_above_minus_one(a, "gn3ad");
  const Bits bits = base_bits(ctx);
  const Real x = a.rounded(std::max(a.precision(), bits));
  const Real rhs = digamma(x + 1L, bits);
  const Real three_ln3 = 3L * log(Real(3L, bits));
  const Real third = Real(1L, bits) / 3L;
  const Real two_thirds = Real(2L, bits) / 3L;
  auto term = [&](long j) {
    const Real scale = Real(detail::power(3, j + 1), bits);
    const Real y = x / scale;
    return (three_ln3 + digamma(y + third, bits) + digamma(y + two_thirds, bits)) / scale;
  };
  return detail::sum_report("gn3ad", {{"a", a.to_string(ctx.digits)}}, term, 0, rhs, ctx);
}

}  // namespace sincprod
