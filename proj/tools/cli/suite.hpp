#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"
#include "sincprod/report.hpp"

namespace sincprod::cli {

struct CheckOutcome {
  std::string label;
  Verdict verdict = Verdict::pass;
  std::string detail;
};

struct CriterionResult {
  int number = 0;
  std::string title;
  Verdict verdict = Verdict::pass;
  int checks = 0;
  // Only checks that did not pass.
  std::vector<CheckOutcome> problems;
  std::string summary;
  double seconds = 0;
};

inline constexpr int kCriterionCount = 12;

// Tolerance 10^-exponent as stated for 50 digits; below 50 digits the
// exponent drops by the missing digits so that runs at lower precision are
// judged on the same relative footing.
Real scaled_tolerance(int exponent, const PrecisionContext& ctx);

CriterionResult run_criterion(int number, const PrecisionContext& ctx, std::uint64_t seed);
std::vector<CriterionResult> run_suite(const PrecisionContext& ctx, std::uint64_t seed);

// Exit 0 when every criterion passes, 2 when any fails, otherwise 3.
int suite_exit_code(const std::vector<CriterionResult>& results);

int run_suite_command(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace sincprod::cli
