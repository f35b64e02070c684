#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sincprod/exact_argument.hpp"
#include "sincprod/precision.hpp"
#include "sincprod/report.hpp"

// Registry of verifiable identities keyed by stable string ids. The CLI and
// the acceptance suite go through here; nothing is mutable after startup.
namespace sincprod {

enum class ParamKind {
  exact,    // ExactArgument: "1", "2.2", "pi/3", "3/8*pi"
  real,     // parsed exactly, then rounded to working precision
  integer,
  list,     // comma-separated reals, passed whole (never split by sweeps)
  name,     // free text, e.g. a problem label
};

std::string_view to_string(ParamKind kind);

struct ParamSpec {
  std::string name;
  ParamKind kind = ParamKind::exact;
  // Empty means required.
  std::string default_value;
  std::string help;
};

using ParamMap = std::map<std::string, std::string>;

class Params {
 public:
  Params(ParamMap values, const PrecisionContext& ctx) : values_(std::move(values)), ctx_(ctx) {}
  const std::string& text(const std::string& name) const;
  ExactArgument exact(const std::string& name) const;
  Real real(const std::string& name) const;
  long integer(const std::string& name) const;
  std::vector<Real> list(const std::string& name) const;

 private:
  ParamMap values_;
  const PrecisionContext& ctx_;
};

struct IdentitySpec {
  std::string id;
  std::string description;
  std::vector<ParamSpec> params;
  std::function<VerificationReport(const Params&, const PrecisionContext&)> evaluate;

  // Fills defaults and rejects unknown or missing keys (DomainError).
  ParamMap complete(const ParamMap& given) const;
};

const std::vector<IdentitySpec>& identity_catalog();
// nullptr when unknown.
const IdentitySpec* find_identity(std::string_view id);

// complete() + evaluate. Domain problems surface as DomainError or
// ExceptionalPoint; truncation failures as inconclusive reports.
VerificationReport evaluate_identity(const IdentitySpec& spec, const ParamMap& given, const PrecisionContext& ctx);

}  // namespace sincprod
