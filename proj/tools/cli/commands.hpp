#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"
#include "sincprod/catalog.hpp"

namespace sincprod::cli {

enum ExitCode : int {
  kExitPass = 0,
  kExitInternal = 1,
  kExitFail = 2,
  kExitInconclusive = 3,
  kExitUnknownIdentity = 4,
  kExitBadParameters = 5,
};

int exit_code_for(Verdict verdict);

// "key=value" tokens to a map; throws DomainError on a token without '='.
ParamMap parse_assignments(const std::vector<std::string>& tokens);

// One axis of a sweep grid. Accepted forms:
//   lo:hi:count         inclusive linspace over exact rationals
//   v1,v2,...           explicit list
//   rand:lo:hi:count    seeded pseudo-random rationals in (lo, hi)
//   single value
// `pi` factors are allowed in list entries and single values ("pi/3").
std::vector<std::string> expand_axis(const std::string& spec, std::uint64_t seed);

struct Grid {
  std::vector<std::string> names;
  std::vector<ParamMap> points;  // row-major, first axis outermost
};
// Axes whose parameter kind is `list` are passed through unsplit.
Grid build_grid(const IdentitySpec& spec, const ParamMap& ranges, std::uint64_t seed);

int run_verify(const std::string& id, const ParamMap& params, const RunConfig& config, std::ostream& out,
               std::ostream& err);
int run_sweep(const std::string& id, const ParamMap& ranges, const RunConfig& config, std::ostream& out,
              std::ostream& err);
// kind: dobinski | weierstrass | telescoping
int run_trace(const std::string& kind, const ParamMap& params, const RunConfig& config, std::ostream& out,
              std::ostream& err);
// Named problem (or "custom" with g=<sin|cos|...> x= p= boundary=) at a=,
// with optional N= for the finite unrolling.
int run_funceq(const std::string& problem, const ParamMap& params, const RunConfig& config, std::ostream& out,
               std::ostream& err);
// Lists catalog ids and parameter schemas.
void write_catalog(std::ostream& out);

}  // namespace sincprod::cli
