#include "sincprod/report.hpp"

#include <algorithm>

namespace sincprod {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

Real magnitude(const Value& value) {
  if (const Real* r = std::get_if<Real>(&value)) return abs(*r);
  return abs(std::get<Complex>(value));
}

namespace {

Complex as_complex(const Value& v) {
  if (const Real* r = std::get_if<Real>(&v)) return Complex(*r);
  return std::get<Complex>(v);
}

}  // namespace

Value difference(const Value& a, const Value& b) {
  if (std::holds_alternative<Real>(a) && std::holds_alternative<Real>(b)) {
    return std::get<Real>(a) - std::get<Real>(b);
  }
  return as_complex(a) - as_complex(b);
}

std::string VerificationReport::extra(std::string_view key) const {
  for (const auto& [k, v] : extras) {
    if (k == key) return v;
  }
  return {};
}

Real default_threshold(const Value& rhs, const PrecisionContext& ctx) {
  return max(ctx.tail_tolerance, ctx.rel_tolerance * magnitude(rhs));
}

VerificationReport make_report_with_threshold(std::string identity_id, KeyValues parameters, Value lhs,
                                              Value rhs, Real threshold, int terms_used, Real tail_bound) {
  VerificationReport report;
  report.identity_id = std::move(identity_id);
  report.parameters = std::move(parameters);
  report.abs_error = magnitude(difference(lhs, rhs));
  const Real rhs_magnitude = magnitude(rhs);
  report.rel_error = rhs_magnitude.is_zero() ? report.abs_error : report.abs_error / rhs_magnitude;
  report.lhs = std::move(lhs);
  report.rhs = std::move(rhs);
  report.terms_used = terms_used;
  report.tail_bound = std::move(tail_bound);
  report.threshold = std::move(threshold);
  report.verdict = report.abs_error <= report.threshold ? Verdict::pass : Verdict::fail;
  return report;
}

VerificationReport make_report(std::string identity_id, KeyValues parameters, Value lhs, Value rhs,
                               const PrecisionContext& ctx, int terms_used, Real tail_bound) {
  Real threshold = default_threshold(rhs, ctx);
  return make_report_with_threshold(std::move(identity_id), std::move(parameters), std::move(lhs), std::move(rhs),
                                    std::move(threshold), terms_used, std::move(tail_bound));
}

VerificationReport inconclusive_report(std::string identity_id, KeyValues parameters,
                                       const PartialEvaluation& partial, Value rhs, const std::string& why) {
  VerificationReport report = make_report_with_threshold(std::move(identity_id), std::move(parameters),
                                                         partial.value, std::move(rhs), Real(), partial.terms_used,
                                                         partial.tail_bound);
  report.verdict = Verdict::inconclusive;
  report.notes.push_back(why);
  return report;
}

}  // namespace sincprod
