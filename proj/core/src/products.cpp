#include "sincprod/products.hpp"

#include <cmath>
#include <string>

#include "detail.hpp"
#include "sincprod/classify.hpp"

namespace sincprod {

using detail::amplified_bits;
using detail::base_bits;
using detail::inverse_power;
using detail::trig;

namespace {

// 2^e ln|tan(x)/x|, x = scale * a. The rounding error of the log is
// multiplied by 2^e, so the caller passes bits grown by e.
SignedLog tan_ratio_log(const ExactArgument& a, const mpq_class& scale, long e, Bits bits) {
  const Real t = trig(ElementaryFn::tan, a, scale, bits);
  const Real x = realize(a.scaled(scale), bits);
  return detail::powered_log(t / x, e);
}

SignedLog cot_ratio_log(const ExactArgument& a, const mpq_class& scale, long e, Bits bits) {
  const Real c = trig(ElementaryFn::cot, a, scale, bits);
  const Real x = realize(a.scaled(scale), bits);
  return detail::powered_log(c * x, e);
}

VerificationReport trivial_at_zero(std::string id, KeyValues params, const PrecisionContext& ctx) {
  const Real one(1L, ctx.bits());
  VerificationReport report = make_report(std::move(id), std::move(params), one, one, ctx);
  report.notes.push_back("a = 0: every factor is 1 in the limit and both sides equal 1");
  return report;
}

Real signed_exp(const Real& log_abs, bool negative) {
  Real v = exp(log_abs);
  return negative ? -v : v;
}

// Log-space product of tan-ratio factors at a = 2^m (2n-1) pi from j = m+2.
VerificationReport exceptional_product(std::string id, KeyValues params, long m, long n, const Real& rhs,
                                       const PrecisionContext& ctx) {
  const ExactArgument a = ExactArgument::pi_times(mpq_class(2 * n - 1) * detail::power(2, m));
  auto factor = [&](long j) { return tan_ratio_log(a, inverse_power(2, j), j - 1, amplified_bits(ctx, j)); };
  return detail::product_report(std::move(id), std::move(params), factor, m + 2, rhs, ctx);
}

void require_nonzero(const ExactArgument& a, const char* id) {
  if (a.is_zero()) throw DomainError(std::string(id) + " requires a nonzero argument");
}

Real nonzero_denominator(Real v, const char* what) {
  if (v.is_zero()) throw DomainError(std::string(what) + " vanishes at this argument");
  return v;
}

}  // namespace

void require_not_pi_multiple(const ExactArgument& a, std::string_view identity) {
  const ArgumentClass c = classify(a);
  if (!c.is_pi_multiple()) return;
  std::string redirect;
  if (c.kind == ArgumentClass::Kind::odd_pi_multiple) {
    redirect = "cpodd n=" + std::to_string(c.n) + " (or peo2 m=0 n=" + std::to_string(c.n) + ")";
  } else {
    redirect = "peo2 m=" + std::to_string(c.m) + " n=" + std::to_string(c.n);
  }
  throw ExceptionalPoint(std::string(identity) + ": a = " + a.to_string() + " is an exceptional point (" +
                             c.describe() + "); use " + redirect,
                         redirect);
}

VerificationReport vsum2_product(const ExactArgument& a, const PrecisionContext& ctx) {
  require_not_pi_multiple(a, "vsum2");
  if (a.is_zero()) return trivial_at_zero("vsum2", detail::arg_param(a), ctx);
  const Bits bits = base_bits(ctx);
  const Real rhs = realize(a, bits) / trig(ElementaryFn::sin, a, 1, bits);
  auto factor = [&](long j) { return tan_ratio_log(a, inverse_power(2, j), j - 1, amplified_bits(ctx, j)); };
  return detail::product_report("vsum2", detail::arg_param(a), factor, 1, rhs, ctx);
}

VerificationReport vsum2a_hyperbolic(const Real& b, const PrecisionContext& ctx) {
  KeyValues params{{"b", b.to_string(ctx.digits)}};
  if (b.is_zero()) return trivial_at_zero("vsum2a", params, ctx);
  const Real bb = b.rounded(std::max(b.precision(), base_bits(ctx)));
  const Real rhs = bb / sinh(bb);
  auto factor = [&](long j) {
    const Real y = ldexp(bb.rounded(std::max(bb.precision(), amplified_bits(ctx, j))), -j);
    return detail::powered_log(tanh(y) / y, j - 1);
  };
  return detail::product_report("vsum2a", params, factor, 1, rhs, ctx);
}

VerificationReport sinc_cot_product(const ExactArgument& a, const PrecisionContext& ctx) {
  require_not_pi_multiple(a, "sinc");
  if (a.is_zero()) return trivial_at_zero("sinc", detail::arg_param(a), ctx);
  const Bits bits = base_bits(ctx);
  const Real rhs = trig(ElementaryFn::sin, a, 1, bits) / realize(a, bits);
  auto factor = [&](long j) { return cot_ratio_log(a, inverse_power(2, j), j - 1, amplified_bits(ctx, j)); };
  return detail::product_report("sinc", detail::arg_param(a), factor, 1, rhs, ctx);
}

VerificationReport reciprocity_check(const ExactArgument& a, int terms, const PrecisionContext& ctx) {
  require_not_pi_multiple(a, "reciprocity");
  if (terms < 1) throw DomainError("reciprocity needs at least one factor");
  KeyValues params = detail::arg_param(a);
  params.emplace_back("J", std::to_string(terms));
  if (a.is_zero()) return trivial_at_zero("reciprocity", params, ctx);
  const Bits bits = amplified_bits(ctx, terms);
  Real tan_log(bits);
  Real cot_log(bits);
  bool tan_negative = false;
  bool cot_negative = false;
  for (long j = 1; j <= terms; ++j) {
    const SignedLog t = tan_ratio_log(a, inverse_power(2, j), j - 1, amplified_bits(ctx, j));
    const SignedLog c = cot_ratio_log(a, inverse_power(2, j), j - 1, amplified_bits(ctx, j));
    tan_log += t.log_abs;
    cot_log += c.log_abs;
    tan_negative ^= t.negative;
    cot_negative ^= c.negative;
  }
  const Real product = signed_exp(tan_log, tan_negative) * signed_exp(cot_log, cot_negative);
  VerificationReport report = make_report("reciprocity", params, product, Real(1L, bits), ctx, terms);
  report.add_extra("tan_partial", signed_exp(tan_log, tan_negative).to_string(ctx.digits));
  report.add_extra("cot_partial", signed_exp(cot_log, cot_negative).to_string(ctx.digits));
  return report;
}

VerificationReport cpodd_product(long n, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("cpodd requires n >= 1");
  const Bits bits = base_bits(ctx);
  const Real half_minus_n = Real(mpq_class(1, 2) - n, bits);
  const Real p = pi(bits);
  const Real rhs = p * p * half_minus_n * half_minus_n;
  return exceptional_product("cpodd", {{"n", std::to_string(n)}}, 0, n, rhs, ctx);
}

VerificationReport peo2_product(long m, long n, const PrecisionContext& ctx) {
  if (m < 0 || n < 1) throw DomainError("peo2 requires m >= 0 and n >= 1");
  if (m > 40) throw DomainError("peo2 supports m <= 40");
  const Bits bits = base_bits(ctx) + static_cast<Bits>(m);
  const Real base = pi(bits) * (2 * n - 1) / 2L;
  const Real rhs = pow(base, 1L << (m + 1));
  return exceptional_product("peo2", {{"m", std::to_string(m)}, {"n", std::to_string(n)}}, m, n, rhs, ctx);
}

VerificationReport cp1_check(long n, const Real& eps, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("cp1 requires n >= 1");
  if (!(eps > 0L) || eps > Real::parse("1e-3", 64)) throw DomainError("cp1 requires eps in (0, 1e-3]");
  const Bits bits = base_bits(ctx) + 64;
  const Real e = eps.rounded(bits);
  const Real p = pi(bits);
  const Real x = (e * 2L + (2 * n - 1)) * p / 2L;
  const Real lhs = tan(x) / x;
  const Real rhs = -2L / (p * p * (2 * n - 1) * e);
  const Real threshold = abs(rhs) * Real::parse("1e-3", 64);
  VerificationReport report = make_report_with_threshold(
      "cp1", {{"n", std::to_string(n)}, {"eps", eps.to_string(6)}}, lhs, rhs, threshold);
  report.notes.push_back("asymptotic law; relative acceptance band 1e-3");
  return report;
}

EpsilonScalingStudy epsilon_scaling_study(long m, long n, const std::vector<Real>& eps, const PrecisionContext& ctx) {
  if (m < 0 || n < 1) throw DomainError("epsilon scaling requires m >= 0 and n >= 1");
  if (m > 6) throw DomainError("epsilon scaling supports m <= 6");
  if (eps.size() < 2) throw DomainError("epsilon scaling needs at least two eps values");
  const Real limit = Real::parse("1e-3", 64);
  for (const Real& e : eps) {
    if (!(e > 0L) || e > limit) throw DomainError("each eps must lie in (0, 1e-3] for the asymptotic regime");
  }

  const Bits bits = base_bits(ctx) + 64;
  const Real p = pi(bits);
  const Real ln2 = log2_constant(bits);
  const long odd = 2 * n - 1;

  EpsilonScalingStudy study;
  study.m = m;
  study.n = n;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  Real smallest = eps.front();
  for (const Real& eps_in : eps) {
    const Real e = eps_in.rounded(bits);
    if (e < smallest) smallest = eps_in;
    const Real a = exp((e + m) * ln2) * odd * p;

    Real partial_log(bits);
    bool partial_negative = false;
    for (long j = 1; j <= m; ++j) {
      const Real x = ldexp(a, -j);
      const SignedLog f = detail::powered_log(tan(x) / x, j - 1);
      partial_log += f.log_abs;
      partial_negative ^= f.negative;
    }
    const Real x = ldexp(a, -(m + 1));
    const Real divergent = pow(tan(x) / x, 1L << m);

    EpsilonScalingRow row;
    row.eps = eps_in;
    row.partial = signed_exp(partial_log, partial_negative);
    row.partial_model = pow(e * ln2, (1L << m) - 1);
    row.divergent = divergent;
    row.divergent_model = pow(4L / (ln2 * odd * odd * p * p * e), 1L << m);
    if (m == 0) row.divergent_model = -row.divergent_model;
    row.combined = row.partial * row.divergent;
    const Real y = (e * 2L + odd) * p / 2L;
    row.cp1 = tan(y) / y;
    row.cp1_model = -2L / (p * p * odd * e);

    const double lx = std::log(e.to_double());
    const double ly = log(abs(row.combined)).to_double();
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    study.rows.push_back(std::move(row));
  }
  const double k = static_cast<double>(eps.size());
  const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);

  KeyValues params{{"m", std::to_string(m)}, {"n", std::to_string(n)}};
  std::string list;
  for (const Real& e : eps) list += (list.empty() ? "" : ",") + e.to_string(6);
  params.emplace_back("eps", list);
  study.slope = make_report_with_threshold("epsilon_scaling", params, Real::from_double(slope, 64),
                                           Real(-1L, 64), Real::parse("0.05", 64));
  study.slope.notes.push_back("least-squares slope of ln|combined product| against ln eps");
  study.cp1 = cp1_check(n, smallest, ctx);
  return study;
}

VerificationReport gp1b_product(long n, const ExactArgument& a, const PrecisionContext& ctx) {
  if (n < 0 || n > 30) throw DomainError("gp1b requires 0 <= n <= 30");
  require_not_pi_multiple(a, "gp1b");
  KeyValues params{{"n", std::to_string(n)}, {"a", a.to_string()}};
  if (a.is_zero()) return trivial_at_zero("gp1b", params, ctx);
  const Bits bits = base_bits(ctx) + static_cast<Bits>(n);
  const Real rhs = pow(realize(a, bits) / trig(ElementaryFn::sin, a, 1, bits), 1L << n);
  auto factor = [&](long j) {
    return tan_ratio_log(a, inverse_power(2, j - n), j - 1, amplified_bits(ctx, j));
  };
  return detail::product_report("gp1b", params, factor, n + 1, rhs, ctx);
}

VerificationReport gp1b_induction_step(long n, const ExactArgument& a, const PrecisionContext& ctx) {
  if (n < 0 || n > 29) throw DomainError("gp1b induction requires 0 <= n <= 29");
  require_not_pi_multiple(a, "gp1b_induction");
  KeyValues params{{"n", std::to_string(n)}, {"a", a.to_string()}};
  if (a.is_zero()) return trivial_at_zero("gp1b_induction", params, ctx);
  const Bits bits = base_bits(ctx) + static_cast<Bits>(n) + 1;
  const ExactArgument half = a.scaled(mpq_class(1, 2));
  const long power = 1L << n;

  // (n+1, a/2) product: factors j >= n+2 of (2^(j-n-1)/(a/2) tan(2^(n+1-j) a/2))^(2^(j-1))
  auto factor = [&](long j) {
    return tan_ratio_log(half, inverse_power(2, j - n - 1), j - 1, amplified_bits(ctx, j));
  };
  ProductEvaluation shifted;
  try {
    shifted = multiply_series(factor, n + 2, ctx);
  } catch (const NoConvergence& e) {
    return inconclusive_report("gp1b_induction", params, e.partial(), Real(bits), e.what());
  }
  const Real half_value = realize(half, bits);
  const Real sin_half = trig(ElementaryFn::sin, half, 1, bits);
  const Real cos_half = trig(ElementaryFn::cos, half, 1, bits);
  const Real extracted = pow(trig(ElementaryFn::tan, half, 1, bits) / half_value, power);
  const Real lhs = shifted.value.rounded(bits) * extracted;
  const Real rhs = pow(realize(a, bits), power) / pow(2L * cos_half * sin_half, power);

  VerificationReport report = make_report("gp1b_induction", params, lhs, rhs, ctx, shifted.log_sum.terms_used,
                                          shifted.tail_bound);
  const Real p1_rhs = pow(half_value / sin_half, 2 * power);
  report.add_extra("p1_deviation", relative_difference(shifted.value.rounded(bits), p1_rhs).to_string(6));
  const VerificationReport direct = gp1b_product(n, a, ctx);
  if (direct.verdict != Verdict::inconclusive) {
    report.add_extra("direct_deviation", relative_difference(lhs, std::get<Real>(direct.lhs)).to_string(6));
  }
  return report;
}

VerificationReport finite_p5_product(long n1, long n2, const ExactArgument& a, const PrecisionContext& ctx) {
  if (n1 < 0 || n2 <= n1 || n2 > 24) throw DomainError("p5 requires 0 <= n1 < n2 <= 24");
  require_nonzero(a, "p5");
  KeyValues params{{"n1", std::to_string(n1)}, {"n2", std::to_string(n2)}, {"a", a.to_string()}};
  const Bits bits = amplified_bits(ctx, n2 + 8);

  Real lhs_log(bits);
  bool lhs_negative = false;
  for (long j = n1 + 1; j <= n2; ++j) {
    const SignedLog f = tan_ratio_log(a, inverse_power(2, j), j - 1, bits);
    lhs_log += f.log_abs;
    lhs_negative ^= f.negative;
  }

  const long big1 = 1L << n1;
  const long big2 = 1L << n2;
  const Real av = realize(a, bits);
  const Real s1 = nonzero_denominator(trig(ElementaryFn::sin, a, inverse_power(2, n1), bits), "sin(a/N1)");
  const Real s2 = trig(ElementaryFn::sin, a, inverse_power(2, n2), bits);
  if (s2.is_zero()) throw DomainError("sin(a/N2) vanishes at this argument");
  Real rhs_log = log(abs(av)) * (big1 - big2) + log2_constant(bits) * (big2 * n2 - big1 * n1) +
                 log(abs(s2)) * big2 - log(abs(s1)) * big1;
  bool rhs_negative = false;
  if (av.sign() < 0 && ((big1 - big2) % 2 != 0)) rhs_negative = !rhs_negative;
  if (s2.sign() < 0 && big2 % 2 != 0) rhs_negative = !rhs_negative;
  if (s1.sign() < 0 && big1 % 2 != 0) rhs_negative = !rhs_negative;

  return make_report("p5", params, signed_exp(lhs_log, lhs_negative), signed_exp(rhs_log, rhs_negative), ctx,
                     static_cast<int>(n2 - n1));
}

VerificationReport x1_identity(const ExactArgument& a, const PrecisionContext& ctx) {
  const Bits bits = base_bits(ctx);
  Real lhs = trig(ElementaryFn::tan, a, 1, bits);
  for (long j = 1; j <= 3; ++j) lhs *= pow(trig(ElementaryFn::tan, a, inverse_power(2, j), bits), 1L << j);
  const Real denom = nonzero_denominator(trig(ElementaryFn::sin, a, 2, bits), "sin 2a");
  const Real rhs = Real::power_of_two(15, bits) * pow(trig(ElementaryFn::sin, a, inverse_power(2, 3), bits), 16) / denom;
  return make_report("x1", detail::arg_param(a), lhs, rhs, ctx);
}

VerificationReport x1a_identity(const ExactArgument& a, const PrecisionContext& ctx) {
  const Bits bits = base_bits(ctx);
  const Real c = nonzero_denominator(trig(ElementaryFn::cos, a, 1, bits), "cos a");
  Real lhs = trig(ElementaryFn::sin, a, 2, bits) * trig(ElementaryFn::sin, a, 1, bits) / c;
  for (long j = 1; j <= 3; ++j) lhs *= pow(trig(ElementaryFn::tan, a, inverse_power(2, j), bits), 1L << j);
  const Real rhs = Real::power_of_two(15, bits) * pow(trig(ElementaryFn::sin, a, inverse_power(2, 3), bits), 16);
  return make_report("x1a", detail::arg_param(a), lhs, rhs, ctx);
}

VerificationReport x1b_identity(long n, const ExactArgument& a, const PrecisionContext& ctx) {
  if (n < 0) throw DomainError("x1b requires n >= 0");
  const Bits bits = base_bits(ctx);
  const Real lhs = trig(ElementaryFn::tan, a, inverse_power(2, n + 1), bits);
  const Real s = trig(ElementaryFn::sin, a, inverse_power(2, n + 1), bits);
  const Real denom = nonzero_denominator(trig(ElementaryFn::sin, a, inverse_power(2, n), bits), "sin(a/2^n)");
  return make_report("x1b", {{"n", std::to_string(n)}, {"a", a.to_string()}}, lhs, 2L * s * s / denom, ctx);
}

VerificationReport sin2a_identity(const ExactArgument& a, const PrecisionContext& ctx) {
  const Bits bits = base_bits(ctx);
  const mpq_class half(1, 2);
  const Real lhs = trig(ElementaryFn::sin, a, 1, bits);
  const Real rhs = 2L * trig(ElementaryFn::cos, a, half, bits) * trig(ElementaryFn::sin, a, half, bits);
  return make_report("sin2a", detail::arg_param(a), lhs, rhs, ctx);
}

}  // namespace sincprod
