#include "sincprod/funceq.hpp"

#include <algorithm>
#include <string>

#include "sincprod/errors.hpp"
#include "sincprod/special.hpp"

namespace sincprod {
namespace {

constexpr Bits kSumGuardBits = 16;

// Every ratio the applications exhibit is at most 1/2; anything up to 0.9
// still gives an honest geometric tail estimate.
constexpr TruncationRule kFunceqRule{0.9};

Real call_g(const FunceqProblem& problem, const Real& arg) {
  Real value;
  try {
    value = problem.g(arg);
  } catch (const std::exception& e) {
    throw EvaluationError("g of '" + problem.label + "' failed at " + arg.to_string(20) + ": " + e.what());
  }
  if (!value.is_finite()) {
    throw EvaluationError("g of '" + problem.label + "' is not finite at " + arg.to_string(20));
  }
  return value;
}

Bits term_bits(const FunceqProblem& problem, long j, const PrecisionContext& ctx) {
  return ctx.working_bits() + kSumGuardBits + static_cast<Bits>(j) * problem.bits_per_step;
}

// u(y) = ln(pi)/2 + lnGamma(y+1) - lnGamma(y+1/2) - 2y ln2, at y's precision.
Real half_ratio_defect(const Real& y) {
  const Bits bits = y.precision();
  Real half = Real(1L, bits) / 2L;
  return log(pi(bits)) / 2L + lngamma(y + 1L, bits) - lngamma(y + half, bits) - 2L * y * log2_constant(bits);
}

// Terms of sum_{j>=1} c(1+j) (-a)^j / (1+j) with c = eta or zeta.
PartialEvaluation power_series(const Real& a, bool zeta, const PrecisionContext& ctx) {
  const Bits bits = ctx.working_bits() + kSumGuardBits;
  const Real x = -a.rounded(bits);
  Real power = Real(1L, bits);
  auto term = [&](long j) {
    power *= x;
    Real c = zeta ? zeta_int(j + 1, bits) : eta_int(j + 1, bits);
    return c * power / (j + 1);
  };
  return sum_series(term, 1, ctx, kFunceqRule);
}

void require_open_unit(const Real& a, const char* what) {
  if (!(abs(a) < 1L)) throw DomainError(std::string(what) + " requires |a| < 1");
}

void require_above_minus_half(const Real& a, const char* what) {
  if (!(a * 2L > -1L)) throw DomainError(std::string(what) + " requires a > -1/2 (Gamma arguments must stay positive)");
}

KeyValues a_param(const Real& a) { return {{"a", a.to_string(30)}}; }

VerificationReport trivial_zero_pass(std::string id, const PrecisionContext& ctx) {
  VerificationReport report = make_report(std::move(id), {{"a", "0"}}, Real(ctx.bits()), Real(ctx.bits()), ctx);
  report.notes.push_back("a = 0: every summand vanishes and the right-hand side has a removable singularity");
  return report;
}

// (1/a) ln(sqrt(pi) Gamma(a/2+1) / (Gamma(a/2+1/2) 2^a)) = u(a/2) / a
Real eta_rhs(const Real& a, const PrecisionContext& ctx) {
  const Real y = a.rounded(ctx.working_bits() + kSumGuardBits) / 2L;
  return half_ratio_defect(y) / a;
}

Real zeta_rhs(const Real& a, const PrecisionContext& ctx) {
  const Real x = a.rounded(ctx.working_bits() + kSumGuardBits);
  return -lngamma(x + 1L, x.precision()) / x - euler_constant(x.precision());
}

}  // namespace

std::string_view to_string(Boundary boundary) {
  switch (boundary) {
    case Boundary::f0_finite: return "f0_finite";
    case Boundary::f0_zero: return "f0_zero";
    case Boundary::f_inf_finite: return "f_inf_finite";
  }
  return "?";
}

void FunceqProblem::validate() const {
  if (!g) throw DomainError("functional equation '" + label + "' has no g");
  if (!(p > 1L)) throw DomainError("functional equation '" + label + "' needs p > 1");
  switch (boundary) {
    case Boundary::f0_finite:
      if (!(abs(x) < 1L)) throw DomainError("boundary f0_finite needs |x| < 1");
      break;
    case Boundary::f0_zero:
      if (!(x == 1L)) throw DomainError("boundary f0_zero needs x = 1");
      break;
    case Boundary::f_inf_finite:
      if (!(x > 1L)) throw DomainError("boundary f_inf_finite needs x > 1");
      break;
  }
}

FiniteExpansion expand_finite(const FunceqProblem& problem, const Real& a, long n, const PrecisionContext& ctx) {
  problem.validate();
  if (n < 1) throw DomainError("expand_finite needs N >= 1");
  const Bits top = term_bits(problem, n, ctx);
  Real weight(1L, top);
  Real arg = a.rounded(top);
  Real partial(top);
  for (long j = 0; j < n; ++j) {
    const Bits bits = term_bits(problem, j, ctx);
    partial += weight * call_g(problem, arg.rounded(bits));
    weight *= problem.x;
    arg /= problem.p;
  }
  return FiniteExpansion{std::move(partial), std::move(weight), std::move(arg)};
}

PartialEvaluation solve_series(const FunceqProblem& problem, const Real& a, const PrecisionContext& ctx) {
  problem.validate();
  if (problem.boundary == Boundary::f_inf_finite) {
    throw DomainError("solve_series needs boundary f0_finite or f0_zero; use solve_expanding");
  }
  auto term = [&](long j) {
    const Bits bits = term_bits(problem, j, ctx);
    const Real arg = a.rounded(bits) / pow(problem.p.rounded(bits), j);
    return pow(problem.x.rounded(bits), j) * call_g(problem, arg);
  };
  return sum_series(term, 0, ctx, kFunceqRule);
}

PartialEvaluation solve_expanding(const FunceqProblem& problem, const Real& a, const PrecisionContext& ctx) {
  problem.validate();
  if (problem.boundary != Boundary::f_inf_finite) {
    throw DomainError("solve_expanding needs boundary f_inf_finite");
  }
  auto term = [&](long j) {
    const Bits bits = term_bits(problem, 0, ctx);
    const Real arg = a.rounded(bits) * pow(problem.p.rounded(bits), j);
    return -call_g(problem, arg) / pow(problem.x.rounded(bits), j);
  };
  return sum_series(term, 1, ctx, kFunceqRule);
}

FunceqProblem named_problem(std::string_view name) {
  auto rational = [](long num, long den) { return Real(mpq_class(num, den), 128); };
  FunceqProblem out;
  out.label = std::string(name);
  out.p = Real(2L, 64);
  if (name == "geometric") {
    out.g = [](const Real& y) { return y; };
    out.x = rational(1, 2);
  } else if (name == "square") {
    out.g = [](const Real& y) { return y * y; };
    out.x = rational(1, 4);
  } else if (name == "reciprocal") {
    out.g = [](const Real& y) { return 1L / y; };
    out.x = rational(2, 1);
    out.boundary = Boundary::f_inf_finite;
  } else if (name == "inverse_square") {
    out.g = [](const Real& y) { return 1L / (y * y); };
    out.x = rational(8, 1);
    out.boundary = Boundary::f_inf_finite;
  } else if (name == "exp_decay") {
    out.g = [](const Real& y) { return exp(-y); };
    out.x = rational(2, 1);
    out.boundary = Boundary::f_inf_finite;
  } else if (name == "duplication") {
    out.g = [](const Real& y) {
      const Bits bits = y.precision();
      const Real half = Real(1L, bits) / 2L;
      return y * log2_constant(bits) - log(pi(bits)) / 2L + lngamma(y / 2L + half, bits);
    };
    out.x = rational(1, 1);
    out.boundary = Boundary::f0_zero;
    out.bits_per_step = 1;
  } else if (name == "rs2") {
    out.g = [](const Real& y) {
      if (y.is_zero()) return Real(y.precision());
      return half_ratio_defect(y) / y;
    };
    out.x = rational(1, 1);
    out.boundary = Boundary::f0_zero;
    out.bits_per_step = 1;
  } else {
    throw DomainError("unknown functional equation '" + std::string(name) + "'");
  }
  return out;
}

std::vector<std::string> named_problem_names() {
  return {"geometric", "square", "reciprocal", "inverse_square", "exp_decay", "duplication", "rs2"};
}

bool has_closed_form(std::string_view name) { return name != "exp_decay" && name != "rs2"; }

Real closed_form(std::string_view name, const Real& a, const PrecisionContext& ctx) {
  const Real x = a.rounded(std::max(a.precision(), ctx.working_bits()));
  if (name == "geometric") return x * 4L / 3L;
  if (name == "square") return x * x * 16L / 15L;
  if (name == "reciprocal") return -1L / (x * 3L);
  if (name == "inverse_square") return -1L / (x * x * 31L);
  if (name == "duplication") return lngamma(x + 1L, ctx);
  throw DomainError("no closed form for '" + std::string(name) + "'");
}

PartialEvaluation rs2_sum(const Real& a, const PrecisionContext& ctx) {
  require_above_minus_half(a, "rs2");
  const Real x = a.rounded(ctx.working_bits() + kSumGuardBits);
  // sum_{j>=1} 2^j u(a/2^j) = a sum_{j>=0} G(a/2^(j+1)) with G(y) = u(y)/y
  PartialEvaluation out = solve_series(named_problem("rs2"), x / 2L, ctx);
  out.value *= x;
  out.tail_bound *= abs(x);
  out.last_term_deviation *= abs(x);
  return out;
}

VerificationReport rs2_check(const Real& a, const PrecisionContext& ctx) {
  require_above_minus_half(a, "rs2");
  const Real x = a.rounded(ctx.working_bits() + kSumGuardBits);
  const Real rhs = -2L * euler_constant(x.precision()) * x;
  try {
    PartialEvaluation sum = rs2_sum(x, ctx);
    Real lhs = sum.value + 2L * lngamma(x + 1L, x.precision());
    return make_report("rs2", a_param(a), lhs, rhs, ctx, sum.terms_used, sum.tail_bound);
  } catch (const NoConvergence& e) {
    PartialEvaluation partial = e.partial();
    partial.value = partial.value * x + 2L * lngamma(x + 1L, x.precision());
    return inconclusive_report("rs2", a_param(a), partial, rhs, e.what());
  }
}

VerificationReport r0a_product_check(const Real& a, const PrecisionContext& ctx) {
  require_above_minus_half(a, "r0a");
  const Bits bits = ctx.working_bits() + kSumGuardBits;
  const Real x = a.rounded(bits);
  const Real rhs = exp(-2L * euler_constant(bits) * x);
  // ln LHS = lnGamma(1+2a) + u(a) + sum_{j>=1} 2^j u(a/2^j)
  const Real head = lngamma(2L * x + 1L, bits) + half_ratio_defect(x);
  try {
    PartialEvaluation sum = rs2_sum(x, ctx);
    Real lhs = exp(head + sum.value);
    Real tail = abs(lhs) * expm1(sum.tail_bound.rounded(bits));
    return make_report("r0a", a_param(a), lhs, rhs, ctx, sum.terms_used, tail);
  } catch (const NoConvergence& e) {
    PartialEvaluation partial = e.partial();
    partial.value = exp(head + partial.value);
    return inconclusive_report("r0a", a_param(a), partial, rhs, e.what());
  }
}

VerificationReport eta_series_check(const Real& a, const PrecisionContext& ctx) {
  require_open_unit(a, "eta series");
  if (a.is_zero()) return trivial_zero_pass("eta_series", ctx);
  const Real rhs = eta_rhs(a, ctx);
  try {
    PartialEvaluation lhs = power_series(a, false, ctx);
    return make_report("eta_series", a_param(a), lhs.value, rhs, ctx, lhs.terms_used, lhs.tail_bound);
  } catch (const NoConvergence& e) {
    return inconclusive_report("eta_series", a_param(a), e.partial(), rhs, e.what());
  }
}

VerificationReport zeta_series_check(const Real& a, const PrecisionContext& ctx) {
  require_open_unit(a, "zeta series");
  if (a.is_zero()) return trivial_zero_pass("zeta_series", ctx);
  const Real rhs = zeta_rhs(a, ctx);
  try {
    PartialEvaluation lhs = power_series(a, true, ctx);
    VerificationReport report =
        make_report("zeta_series", a_param(a), lhs.value, rhs, ctx, lhs.terms_used, lhs.tail_bound);
    VerificationReport split = cm1b_split_check(a, ctx);
    report.add_extra("split_abs_error", split.abs_error.to_string(6));
    report.add_extra("split_verdict", std::string(to_string(split.verdict)));
    return report;
  } catch (const NoConvergence& e) {
    return inconclusive_report("zeta_series", a_param(a), e.partial(), rhs, e.what());
  }
}

VerificationReport cm1b_split_check(const Real& a, const PrecisionContext& ctx) {
  require_open_unit(a, "zeta series");
  if (a.is_zero()) return trivial_zero_pass("cm1b", ctx);
  const Real rhs_head = eta_rhs(a, ctx);
  try {
    PartialEvaluation full = power_series(a, true, ctx);
    PartialEvaluation half = power_series(a / 2L, true, ctx);
    Real rhs = rhs_head + half.value;
    Real tail = full.tail_bound + half.tail_bound;
    return make_report("cm1b", a_param(a), full.value, rhs, ctx, full.terms_used + half.terms_used, tail);
  } catch (const NoConvergence& e) {
    return inconclusive_report("cm1b", a_param(a), e.partial(), rhs_head, e.what());
  }
}

VerificationReport duplication_check(const Real& a, const PrecisionContext& ctx) {
  if (!(a > -1L)) throw DomainError("duplication requires a > -1");
  const Bits bits = ctx.working_bits() + kSumGuardBits;
  const Real x = a.rounded(std::max(a.precision(), bits));
  const Real half = Real(1L, bits) / 2L;
  const Real lhs = lngamma(x + 1L, bits);
  const Real rhs = x * log2_constant(bits) - log(pi(bits)) / 2L + lngamma(x / 2L + half, bits) +
                   lngamma(x / 2L + 1L, bits);
  return make_report("duplication", a_param(a), lhs, rhs, ctx);
}

VerificationReport gauss_multiplication_check(long n, const Real& a, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("Gauss multiplication requires n >= 1");
  if (!(a > 0L)) throw DomainError("Gauss multiplication requires a > 0");
  const Bits bits = ctx.working_bits() + kSumGuardBits;
  const Real x = a.rounded(std::max(a.precision(), bits));
  const Real lhs = lngamma(x * n, bits);
  Real rhs = Real(mpq_class(1 - n, 2), bits) * log(2L * pi(bits)) +
             (x * n - Real(mpq_class(1, 2), bits)) * log(Real(n, bits));
  for (long k = 0; k < n; ++k) rhs += lngamma(x + Real(mpq_class(k, n), bits), bits);
  return make_report("gauss_multiplication", {{"n", std::to_string(n)}, {"a", a.to_string(30)}}, lhs, rhs, ctx);
}

}  // namespace sincprod
