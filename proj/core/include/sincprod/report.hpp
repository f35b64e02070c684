#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "sincprod/complex.hpp"
#include "sincprod/precision.hpp"
#include "sincprod/real.hpp"
#include "sincprod/truncation.hpp"

namespace sincprod {

enum class Verdict { pass, fail, inconclusive };

std::string_view to_string(Verdict verdict);

using Value = std::variant<Real, Complex>;

Real magnitude(const Value& value);
Value difference(const Value& a, const Value& b);

using KeyValues = std::vector<std::pair<std::string, std::string>>;

// Outcome of evaluating both sides of one identity.
//
// verdict == pass exactly when abs_error <= threshold, where threshold is
// max(ctx.tail_tolerance, ctx.rel_tolerance * |rhs|) unless the identity
// documents its own acceptance band (slope fits, finite differences).
// verdict == inconclusive when the truncation engine gave up.
struct VerificationReport {
  std::string identity_id;
  KeyValues parameters;
  Value lhs;
  Value rhs;
  Real abs_error;
  Real rel_error;
  int terms_used = 0;
  Real tail_bound;
  Real threshold;
  Verdict verdict = Verdict::inconclusive;
  // Identity-specific annotations (zero-factor indices, redirect hints, ...).
  KeyValues extras;
  std::vector<std::string> notes;

  bool passed() const { return verdict == Verdict::pass; }
  void add_extra(std::string key, std::string value) { extras.emplace_back(std::move(key), std::move(value)); }
  // Empty when absent.
  std::string extra(std::string_view key) const;
};

Real default_threshold(const Value& rhs, const PrecisionContext& ctx);

VerificationReport make_report(std::string identity_id, KeyValues parameters, Value lhs, Value rhs,
                               const PrecisionContext& ctx, int terms_used = 0, Real tail_bound = Real());

VerificationReport make_report_with_threshold(std::string identity_id, KeyValues parameters, Value lhs,
                                              Value rhs, Real threshold, int terms_used = 0,
                                              Real tail_bound = Real());

// Report for a truncation that ran out of terms: lhs is the partial value.
VerificationReport inconclusive_report(std::string identity_id, KeyValues parameters,
                                       const PartialEvaluation& partial, Value rhs, const std::string& why);

}  // namespace sincprod
