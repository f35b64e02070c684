#include "sincprod/anomalies.hpp"

#include <string>

#include "detail.hpp"
#include "sincprod/classify.hpp"
#include "sincprod/products.hpp"

namespace sincprod {

using detail::base_bits;
using detail::trig;

namespace {

void require_dobinski_domain(const ExactArgument& a) {
  const ArgumentClass c = classify(a);
  if (c.kind == ArgumentClass::Kind::pole_dyadic) {
    throw DomainError("Dobinski product undefined at the dyadic pole a = " + a.to_string());
  }
  if (c.is_pi_multiple() || a.is_zero()) {
    throw DomainError("Dobinski product is identically 0 at a = " + a.to_string() + " (tan a = 0)");
  }
}

Complex real_complex(const Real& x) { return Complex(x, Real(x.precision())); }

}  // namespace

DobinskiTrace dobinski_evaluate(const ExactArgument& a, long J, const PrecisionContext& ctx) {
  if (J < 0 || J > 2000) throw DomainError("Dobinski trace requires 0 <= J <= 2000");
  require_dobinski_domain(a);
  const Bits bits = base_bits(ctx);
  const Real p = pi(bits);
  const Real sin_a = trig(ElementaryFn::sin, a, 1, bits);

  DobinskiTrace trace;
  trace.a = a;
  trace.target = 4L * sin_a * sin_a;
  trace.max_branch_closure_deviation = Real(bits);

  Complex partial = real_complex(Real(1L, bits));
  Real factor_phase(bits);
  for (long j = 0; j <= J; ++j) {
    const mpq_class scale = detail::power(2, j);
    const Real w = Real::power_of_two(-j, bits);
    DobinskiRow row;
    row.j = j;
    row.tan_value = trig(ElementaryFn::tan, a, scale, bits);
    row.complex_branch = row.tan_value.sign() < 0;
    row.factor = pow_principal(real_complex(row.tan_value), w);
    partial = partial * row.factor;
    row.partial = partial;
    row.target_deviation = abs(partial - real_complex(trace.target));
    if (row.complex_branch) factor_phase += p * w;

    const Real s = trig(ElementaryFn::sin, a, scale * 2, bits);
    row.closure = partial * pow_principal(real_complex(2L * s), w);
    row.closure_deviation = abs(row.closure - real_complex(trace.target));
    row.phase = s.sign() < 0 ? factor_phase + p * w : factor_phase;
    row.branch_closure_deviation = abs(row.closure - polar(trace.target, row.phase));
    row.agnew_walker = pow_principal(real_complex(s), w);
    trace.max_branch_closure_deviation = max(trace.max_branch_closure_deviation, row.branch_closure_deviation);
    trace.rows.push_back(std::move(row));
  }
  return trace;
}

VerificationReport dobinski_closure_check(const ExactArgument& a, long J, const PrecisionContext& ctx) {
  const DobinskiTrace trace = dobinski_evaluate(a, J, ctx);
  const DobinskiRow& last = trace.rows.back();
  const Complex rhs = polar(trace.target, last.phase);
  VerificationReport report =
      make_report("dobinski_closure", {{"a", a.to_string()}, {"J", std::to_string(J)}}, last.closure, rhs, ctx,
                  static_cast<int>(J + 1));
  report.add_extra("literal_deviation", last.closure_deviation.to_string(6));
  report.add_extra("branch_phase", last.phase.to_string(20));
  long complex_factors = 0;
  for (const DobinskiRow& row : trace.rows) complex_factors += row.complex_branch ? 1 : 0;
  report.add_extra("complex_factors", std::to_string(complex_factors));
  report.add_extra("partial_deviation", last.target_deviation.to_string(6));
  return report;
}

AgnewWalkerSequence agnew_walker_condition(const ExactArgument& a, long J, const PrecisionContext& ctx,
                                           const Real& tolerance) {
  if (J < 0 || J > 2000) throw DomainError("Agnew-Walker sequence requires 0 <= J <= 2000");
  require_dobinski_domain(a);
  const Bits bits = base_bits(ctx);
  AgnewWalkerSequence out;
  out.a = a;
  out.tolerance = tolerance;
  for (long j = 0; j <= J; ++j) {
    const Real s = trig(ElementaryFn::sin, a, detail::power(2, j + 1), bits);
    AgnewWalkerRow row;
    row.j = j;
    row.s = pow_principal(real_complex(s), Real::power_of_two(-j, bits));
    row.modulus = abs(row.s);
    row.phase = arg(row.s);
    row.deviation = abs(row.s - real_complex(Real(1L, bits)));
    row.near_one = row.deviation < tolerance;
    out.rows.push_back(std::move(row));
  }
  out.trailing_near_one = out.rows.back().near_one;
  return out;
}

VerificationReport agnew_walker_check(const ExactArgument& a, long J, const PrecisionContext& ctx) {
  const Real tolerance = Real::parse("1e-3", 64);
  const AgnewWalkerSequence seq = agnew_walker_condition(a, J, ctx, tolerance);
  const AgnewWalkerRow& last = seq.rows.back();
  VerificationReport report = make_report_with_threshold(
      "agnew_walker", {{"a", a.to_string()}, {"J", std::to_string(J)}}, last.modulus,
      Real(1L, last.modulus.precision()), tolerance, static_cast<int>(J + 1));
  report.add_extra("s_deviation", last.deviation.to_string(6));
  report.add_extra("s_phase", last.phase.to_string(20));
  return report;
}

LimitTrajectory weierstrass_trajectory(const ExactArgument& a, long k_max, const PrecisionContext& ctx,
                                       bool allow_expensive) {
  if (k_max < 1) throw DomainError("trajectory requires k_max >= 1");
  const int needed = ctx.reduction_digits(2, static_cast<unsigned long>(k_max));
  if (needed > 4 * ctx.digits && !allow_expensive) {
    throw DomainError("k_max = " + std::to_string(k_max) + " needs " + std::to_string(needed) +
                      " digits for argument reduction, more than 4x the working digits; pass the override to proceed");
  }
  const Bits bits = base_bits(ctx);
  const Real sin_a = trig(ElementaryFn::sin, a, 1, bits);
  if (sin_a.is_zero()) throw DomainError("trajectory requires sin a != 0");

  LimitTrajectory out;
  out.a = a;
  out.max_identity_deviation = Real(bits);
  out.max_br114a_deviation = Real(bits);
  Real product(1L, bits);
  Real previous_br114a;
  bool have_previous = false;
  for (long k = 1; k <= k_max; ++k) {
    const Real before = product;
    product *= trig(ElementaryFn::cos, a, detail::power(2, k - 1), bits);
    const Real sk = trig(ElementaryFn::sin, a, detail::power(2, k), bits);
    const Real two_k = Real::power_of_two(k, bits);

    TrajectoryRow row;
    row.k = k;
    row.lhs = product;
    row.rhs = sk / (two_k * sin_a);
    row.identity_deviation = relative_difference(row.lhs, row.rhs);
    if (sk.is_zero()) {
      row.br114a = Real(bits);
      mpfr_set_nan(row.br114a.get());
      row.br114a_deviation = Real(bits);
    } else {
      row.br114a = sin_a * product / sk;
      row.br114a_deviation = abs(row.br114a * two_k - 1L);
      if (have_previous && !(abs(row.br114a) < abs(previous_br114a))) out.br114a_decreasing = false;
      previous_br114a = row.br114a;
      have_previous = true;
    }
    out.max_identity_deviation = max(out.max_identity_deviation, row.identity_deviation);
    out.max_br114a_deviation = max(out.max_br114a_deviation, row.br114a_deviation);

    if (k >= 2 && !before.is_zero() && abs(before) < 1L && abs(product) < 1L) {
      const Real ratio = product / before;
      if (abs(ratio - 1L) > Real(1L, 64) / 2L) out.violations.push_back(CauchyViolation{k - 1, k, ratio});
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::vector<long> windows_without_violation(const LimitTrajectory& trajectory, long window) {
  std::vector<long> missing;
  if (window < 1 || trajectory.rows.empty()) return missing;
  const long k_max = trajectory.rows.back().k;
  for (long start = 1; start + window - 1 <= k_max; start += window) {
    bool found = false;
    for (const CauchyViolation& v : trajectory.violations) {
      if (v.k1 >= start && v.k1 < start + window) {
        found = true;
        break;
      }
    }
    if (!found) missing.push_back(start);
  }
  return missing;
}

namespace {

Real cos_product(const ExactArgument& a, long k, Bits bits) {
  Real product(1L, bits);
  for (long j = 0; j < k; ++j) product *= trig(ElementaryFn::cos, a, detail::power(2, j), bits);
  return product;
}

}  // namespace

VerificationReport case1_expansion_check(long n, long k, const PrecisionContext& ctx) {
  if (n < 0 || n > 60) throw DomainError("case1 requires 0 <= n <= 60");
  if (k < 1 || k > 12) throw DomainError("case1 requires 1 <= k <= 12 (finite-difference conditioning)");
  const int step_digits = ctx.digits / 4;
  const Bits bits = base_bits(ctx) + static_cast<Bits>(4 * step_digits) + 64;
  const mpq_class h = mpq_class(1) / detail::power(10, step_digits);
  const mpq_class center = detail::power(2, n);

  bool unity = true;
  for (long j = 0; j < k; ++j) {
    if (!(trig(ElementaryFn::cos, ExactArgument::pi_times(center), detail::power(2, j), bits) == 1L)) unity = false;
  }
  const Real mid = cos_product(ExactArgument::pi_times(center), k, bits);
  const Real plus = cos_product(ExactArgument(h, center), k, bits);
  const Real minus = cos_product(ExactArgument(-h, center), k, bits);
  const Real h_real(h, bits);
  const Real second = (plus - 2L * mid + minus) / (h_real * h_real);
  const Real lhs = second / (2L * mid);
  const Real rhs = Real(1L - (1L << (2 * k)), bits) / 6L;
  VerificationReport report = make_report_with_threshold(
      "case1", {{"n", std::to_string(n)}, {"k", std::to_string(k)}}, lhs, rhs, abs(rhs) * Real::parse("1e-6", 64),
      static_cast<int>(k));
  report.add_extra("center_value", mid.to_string(10));
  report.add_extra("factors_unity", unity ? "true" : "false");
  report.add_extra("step", "1e-" + std::to_string(step_digits));
  if (!unity) report.notes.push_back("a factor at the center is not 1 (cos(pi) = -1 when n = 0); coefficient normalised by the center value");
  return report;
}

VerificationReport case2_zero_factor(long m, long k, const PrecisionContext& ctx) {
  if (m < 1 || m > 60 || k < 1 || k > 10000) throw DomainError("case2 requires 1 <= m <= 60 and 1 <= k <= 10000");
  const Bits bits = base_bits(ctx);
  const ExactArgument a = ExactArgument::pi_times(detail::inverse_power(2, m));
  Real product(1L, bits);
  std::vector<long> zeros;
  for (long j = 0; j < k; ++j) {
    const Real c = trig(ElementaryFn::cos, a, detail::power(2, j), bits);
    if (c.is_zero()) zeros.push_back(j);
    product *= c;
  }
  const Real rhs = trig(ElementaryFn::sin, a, detail::power(2, k), bits) /
                   (Real::power_of_two(k, bits) * trig(ElementaryFn::sin, a, 1, bits));
  VerificationReport report = make_report_with_threshold(
      "case2", {{"m", std::to_string(m)}, {"k", std::to_string(k)}}, product, rhs,
      max(ctx.tail_tolerance, ctx.rel_tolerance * abs(rhs)), static_cast<int>(k));
  std::string list;
  for (long z : zeros) list += (list.empty() ? "" : ",") + std::to_string(z);
  report.add_extra("zero_factors", list);
  report.add_extra("rhs_zero", rhs.is_zero() ? "true" : "false");
  const std::vector<long> expected = k >= m ? std::vector<long>{m - 1} : std::vector<long>{};
  if (zeros != expected || rhs.is_zero() != (k >= m)) {
    report.verdict = Verdict::fail;
    report.notes.push_back("vanishing factors differ from the expected index m-1");
  }
  return report;
}

VerificationReport jo2_zero_anatomy(long k, const PrecisionContext& ctx) {
  if (k < 2 || k % 2 != 0) throw DomainError("jo2 zero anatomy requires an even k >= 2");
  VerificationReport report = jo2_product(k, ctx);
  report.identity_id = "jo2_zeros";
  const std::string expected = std::to_string(k / 2) + "," + std::to_string(3 * k / 2);
  if (report.extra("zero_factors") != expected || !std::get<Real>(report.rhs).is_zero()) {
    report.verdict = Verdict::fail;
    report.notes.push_back("expected exactly the zero factors " + expected);
  }
  report.notes.push_back("two vanishing factors on the left against a simple zero of the closed form; k is discrete, so no order of zero is defined");
  return report;
}

}  // namespace sincprod
