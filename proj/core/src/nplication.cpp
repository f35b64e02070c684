#include <string>

#include "detail.hpp"
#include "sincprod/products.hpp"

namespace sincprod {

using detail::base_bits;
using detail::inverse_power;
using detail::trig;

namespace {

Real cos_at(const ExactArgument& a, const mpq_class& scale, Bits bits) {
  return trig(ElementaryFn::cos, a, scale, bits);
}

long first_index(NplicationForm form) { return form == NplicationForm::gn3ci ? 1 : 0; }

// sin a = 0 for a nonzero integer multiple of pi, so some factor vanishes.
void require_nonvanishing_sinc(const ExactArgument& a, const char* id) {
  if (a.is_pure_pi_multiple() && a.pi_multiple().get_den() == 1) {
    throw DomainError(std::string(id) + ": a = " + a.to_string() +
                      " is a nonzero multiple of pi, so sin(a)/a = 0 and one factor vanishes");
  }
}

Real sinc_value(const ExactArgument& a, Bits bits) {
  if (a.is_zero()) return Real(1L, bits);
  return trig(ElementaryFn::sin, a, 1, bits) / realize(a, bits);
}

}  // namespace

std::string_view to_string(NplicationForm form) {
  switch (form) {
    case NplicationForm::g2a: return "g2a";
    case NplicationForm::g2x: return "g2x";
    case NplicationForm::gn1: return "gn1";
    case NplicationForm::gn4a: return "gn4a";
    case NplicationForm::gn3ca: return "gn3ca";
    case NplicationForm::gn3ci: return "gn3ci";
    case NplicationForm::gn5b: return "gn5b";
  }
  return "?";
}

long nplication_base(NplicationForm form, long N) {
  switch (form) {
    case NplicationForm::g2a: return 2 * N;
    case NplicationForm::g2x: return 2 * N + 1;
    case NplicationForm::gn1: return 2;
    case NplicationForm::gn4a: return 4;
    case NplicationForm::gn3ca:
    case NplicationForm::gn3ci: return 3;
    case NplicationForm::gn5b: return 5;
  }
  return 0;
}

NplicationForm nplication_form_for_base(long q) {
  if (q < 2) throw DomainError("N-plication base must be at least 2");
  switch (q) {
    case 2: return NplicationForm::gn1;
    case 3: return NplicationForm::gn3ca;
    case 4: return NplicationForm::gn4a;
    case 5: return NplicationForm::gn5b;
    default: return q % 2 == 0 ? NplicationForm::g2a : NplicationForm::g2x;
  }
}

Real nplication_factor(NplicationForm form, long N, long j, const ExactArgument& a, Bits bits) {
  switch (form) {
    case NplicationForm::g2a: {
      if (N < 1) throw DomainError("g2a requires N >= 1");
      const mpq_class step = inverse_power(2 * N, 1 + j);
      Real sum(bits);
      for (long n = 1; n <= N; ++n) sum += cos_at(a, step * (2 * n - 1), bits);
      return sum / N;
    }
    case NplicationForm::g2x: {
      if (N < 1) throw DomainError("g2x requires N >= 1");
      const mpq_class step = inverse_power(2 * N + 1, 1 + j);
      Real sum(bits);
      for (long n = 1; n <= N; ++n) sum += cos_at(a, step * (2 * n), bits);
      return (2L * sum + 1L) / (2 * N + 1);
    }
    case NplicationForm::gn1:
      return cos_at(a, inverse_power(2, 1 + j), bits);
    case NplicationForm::gn4a: {
      const mpq_class step = inverse_power(4, 1 + j);
      return (cos_at(a, step, bits) + cos_at(a, step * 3, bits)) / 2L;
    }
    case NplicationForm::gn3ca:
      return (2L * cos_at(a, inverse_power(3, 1 + j) * 2, bits) + 1L) / 3L;
    case NplicationForm::gn3ci: {
      const Real s = trig(ElementaryFn::sin, a, inverse_power(3, j), bits);
      return 1L - 4L * s * s / 3L;
    }
    case NplicationForm::gn5b: {
      const mpq_class step = inverse_power(5, 1 + j);
      return (2L * cos_at(a, step * 2, bits) + 2L * cos_at(a, step * 4, bits) + 1L) / 5L;
    }
  }
  throw DomainError("unknown N-plication form");
}

VerificationReport nplication_product(NplicationForm form, long N, const ExactArgument& a,
                                      const PrecisionContext& ctx) {
  const std::string id(to_string(form));
  require_nonvanishing_sinc(a, id.c_str());
  KeyValues params{{"q", std::to_string(nplication_base(form, N))}, {"a", a.to_string()}};
  const Bits bits = base_bits(ctx);
  const Real rhs = sinc_value(a, bits);
  auto factor = [&](long j) { return detail::powered_log(nplication_factor(form, N, j, a, bits), 0); };
  return detail::product_report(id, params, factor, first_index(form), rhs, ctx);
}

VerificationReport nplication_by_base(long q, const ExactArgument& a, const PrecisionContext& ctx) {
  const NplicationForm form = nplication_form_for_base(q);
  const long N = q / 2;  // q = 2N or 2N + 1
  VerificationReport report = nplication_product(form, N, a, ctx);
  if (form != NplicationForm::g2a && form != NplicationForm::g2x && report.verdict != Verdict::inconclusive) {
    const NplicationForm general = q % 2 == 0 ? NplicationForm::g2a : NplicationForm::g2x;
    const VerificationReport other = nplication_product(general, N, a, ctx);
    if (other.verdict != Verdict::inconclusive) {
      report.add_extra("general_form", std::string(to_string(general)));
      report.add_extra("general_deviation",
                       abs(std::get<Real>(report.lhs) - std::get<Real>(other.lhs)).to_string(6));
    }
  }
  return report;
}

VerificationReport gn3c_factor_agreement(const ExactArgument& a, int terms, const PrecisionContext& ctx) {
  if (terms < 1) throw DomainError("gn3c agreement needs at least one factor");
  const Bits bits = base_bits(ctx);
  Real worst(bits);
  long worst_j = 0;
  for (long j = 0; j < terms; ++j) {
    const Real d = abs(nplication_factor(NplicationForm::gn3ca, 1, j, a, bits) -
                       nplication_factor(NplicationForm::gn3ci, 1, j + 1, a, bits));
    if (d > worst) {
      worst = d;
      worst_j = j;
    }
  }
  VerificationReport report =
      make_report("gn3c_factors", {{"a", a.to_string()}, {"terms", std::to_string(terms)}}, worst, Real(bits), ctx,
                  terms);
  report.add_extra("worst_index", std::to_string(worst_j));
  return report;
}

VerificationReport viete_product(const PrecisionContext& ctx) {
  const Bits bits = base_bits(ctx);
  const Real two(2L, bits);
  Real radical = sqrt(two);  // sqrt(2 + sqrt(2 + ...)), j + 1 levels deep
  Real max_cos_deviation(bits);
  long current = 0;
  auto factor = [&](long j) {
    for (; current < j; ++current) radical = sqrt(two + radical);
    const Real f = radical / 2L;
    const Real d = abs(f - cos_at(ExactArgument::pi_times(inverse_power(2, j + 2)), 1, bits));
    if (d > max_cos_deviation) max_cos_deviation = d;
    return detail::powered_log(f, 0);
  };
  VerificationReport report = detail::product_report("viete", {}, factor, 0, two / pi(bits), ctx);
  report.add_extra("max_cos_deviation", max_cos_deviation.to_string(6));
  return report;
}

VerificationReport cosine_sum_lemma(Family family, long N, long j, const ExactArgument& a,
                                    const PrecisionContext& ctx) {
  if (N < 1 || j < 0) throw DomainError("cosine sum lemma requires N >= 1 and j >= 0");
  const bool even = family == Family::even;
  const long q = even ? 2 * N : 2 * N + 1;
  const Bits bits = base_bits(ctx);
  const mpq_class step = inverse_power(q, 1 + j);
  Real lhs(bits);
  for (long n = 1; n <= N; ++n) lhs += cos_at(a, step * (even ? 2 * n - 1 : 2 * n), bits);
  const Real denom = trig(ElementaryFn::sin, a, step, bits);
  if (denom.is_zero()) throw DomainError("sin(a/q^(1+j)) vanishes at this argument");
  Real rhs = trig(ElementaryFn::sin, a, inverse_power(q, j), bits) / (2L * denom);
  if (!even) rhs -= Real(1L, bits) / 2L;
  KeyValues params{{"family", even ? "even" : "odd"},
                   {"N", std::to_string(N)},
                   {"j", std::to_string(j)},
                   {"a", a.to_string()}};
  return make_report(even ? "sumid1" : "sumid2", params, lhs, rhs, ctx);
}

TelescopingTrace telescoping_trace(long N, const ExactArgument& a, long J, const PrecisionContext& ctx) {
  if (N < 1 || J < 0) throw DomainError("telescoping trace requires N >= 1 and J >= 0");
  if (a.is_zero()) throw DomainError("telescoping trace requires a nonzero argument");
  const long q = 2 * N + 1;
  const Bits bits = base_bits(ctx);
  const Real av = realize(a, bits);
  const Real sin_a = trig(ElementaryFn::sin, a, 1, bits);

  TelescopingTrace trace;
  trace.N = N;
  trace.a = a;
  trace.max_factor_deviation = Real(bits);
  trace.max_cumulative_deviation = Real(bits);
  Real cumulative(1L, bits);
  Real upper = sin_a;  // sin(a/q^j)
  for (long j = 0; j <= J; ++j) {
    const Real lower = trig(ElementaryFn::sin, a, inverse_power(q, j + 1), bits);
    if (lower.is_zero()) throw DomainError("sin(a/q^(j+1)) vanishes at this argument");
    const Real scale = Real(detail::power(q, j + 1), bits);
    TelescopingRow row;
    row.j = j;
    row.factor = upper / (lower * q);
    row.nplication_factor = nplication_factor(NplicationForm::g2x, N, j, a, bits);
    cumulative *= row.factor;
    row.cumulative = cumulative;
    row.closed_form = sin_a / (scale * lower);
    row.limit_ratio = scale * lower / av;
    trace.max_factor_deviation = max(trace.max_factor_deviation, abs(row.factor - row.nplication_factor));
    trace.max_cumulative_deviation = max(trace.max_cumulative_deviation, abs(row.cumulative - row.closed_form));
    trace.rows.push_back(std::move(row));
    upper = lower;
  }
  return trace;
}

namespace {

Real br114_lhs(const ExactArgument& a, long k, Bits bits) {
  Real product(1L, bits);
  for (long j = 0; j < k; ++j) product *= cos_at(a, detail::power(2, j), bits);
  return product;
}

}  // namespace

VerificationReport br114_finite(const ExactArgument& a, long k, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("br114 requires k >= 1");
  const Bits bits = base_bits(ctx);
  const Real sin_a = trig(ElementaryFn::sin, a, 1, bits);
  if (sin_a.is_zero()) {
    throw DomainError("br114: sin a = 0 at a = " + a.to_string() + "; see case1 / case2 for this limit");
  }
  const Real lhs = br114_lhs(a, k, bits);
  const Real rhs = trig(ElementaryFn::sin, a, detail::power(2, k), bits) / (Real::power_of_two(k, bits) * sin_a);
  VerificationReport report = make_report_with_threshold(
      "br114", {{"a", a.to_string()}, {"k", std::to_string(k)}}, lhs, rhs, ctx.rel_tolerance * abs(rhs),
      static_cast<int>(k));

  PrecisionContext doubled = ctx;
  doubled.digits *= 2;
  const Real lhs2 = br114_lhs(a, k, base_bits(doubled));
  const Real deviation = relative_difference(lhs, lhs2);
  report.add_extra("doubled_precision_deviation", deviation.to_string(6));
  if (deviation > ctx.rel_tolerance) {
    report.verdict = Verdict::fail;
    report.notes.push_back("recomputation at doubled precision disagrees");
  }
  return report;
}

VerificationReport jo1_product(long n, const PrecisionContext& ctx) {
  if (n < 2) throw DomainError("jo1 requires n >= 2");
  if (n > 1000000) throw DomainError("jo1 supports n <= 1000000");
  const Bits bits = base_bits(ctx);
  Real log_sum(bits);
  for (long j = 1; j < n; ++j) {
    log_sum += log(trig(ElementaryFn::tan, ExactArgument::pi_times(mpq_class(j, 2 * n)), 1, bits));
  }
  VerificationReport report =
      make_report("jo1", {{"n", std::to_string(n)}}, exp(log_sum / n), Real(1L, bits), ctx, static_cast<int>(n - 1));
  report.notes.push_back("upper limit n-1: the printed j = n factor is tan(pi/2), a pole");
  return report;
}

VerificationReport jo2_product(long k, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("jo2 requires k >= 1");
  if (k > 1000000) throw DomainError("jo2 supports k <= 1000000");
  const Bits bits = base_bits(ctx);
  Real product(1L, bits);
  std::string zeros;
  for (long j = 1; j <= 2 * k - 1; ++j) {
    const Real c = cos_at(ExactArgument::pi_times(mpq_class(j, k)), 1, bits);
    if (c.is_zero()) zeros += (zeros.empty() ? "" : ",") + std::to_string(j);
    product *= c;
  }
  const Real rhs = Real(k % 2 == 0 ? 0L : -2L, bits) / Real::power_of_two(2 * k - 1, bits);
  VerificationReport report =
      make_report("jo2", {{"k", std::to_string(k)}}, product, rhs, ctx, static_cast<int>(2 * k - 1));
  report.add_extra("zero_factors", zeros);
  return report;
}

VerificationReport euler_sine_product(const ExactArgument& a, long terms, const PrecisionContext& ctx) {
  if (terms < 1) terms = ctx.max_terms;
  KeyValues params{{"a", a.to_string()}, {"terms", std::to_string(terms)}};
  const Bits bits = base_bits(ctx);
  if (a.is_zero()) {
    const Real one(1L, bits);
    return make_report("euler_product", params, one, one, ctx);
  }
  const Real rhs = sinc_value(a, bits);
  if (a.is_pure_pi_multiple() && a.pi_multiple().get_den() == 1) {
    const mpz_class index = abs(a.pi_multiple().get_num());
    if (index <= terms) {
      VerificationReport report = make_report("euler_product", params, Real(bits), rhs, ctx, static_cast<int>(terms));
      report.add_extra("zero_factor", index.get_str());
      return report;
    }
  }
  const Real av = realize(a, bits);
  const Real p = pi(bits);
  const Real ratio = av * av / (p * p);
  Real product(1L, bits);
  for (long j = 1; j <= terms; ++j) product *= 1L - ratio / (Real(j, bits) * j);
  const Real tail = abs(product) * ratio / terms;

  VerificationReport report =
      make_report("euler_product", params, product, rhs, ctx, static_cast<int>(terms), tail);
  report.add_extra("tail_estimate", tail.to_string(6));
  report.add_extra("within_tail_estimate", report.abs_error <= tail * Real::parse("1.1", 64) ? "true" : "false");
  if (report.verdict == Verdict::fail && tail > report.threshold) {
    report.verdict = Verdict::inconclusive;
    report.notes.push_back("slow 1/J convergence: the tail estimate exceeds the tolerance");
  }
  return report;
}

}  // namespace sincprod
