// Runs every acceptance criterion at the default precision and prints one
// line per criterion. Exit status 0 only when all of them pass.

#include <cstdio>

#include "suite.hpp"

int main() {
  using namespace sincprod;
  const PrecisionContext ctx = PrecisionContext::with_digits(50);
  const std::uint64_t seed = cli::RunConfig{}.seed;
  int failures = 0;
  for (int n = 1; n <= cli::kCriterionCount; ++n) {
    const cli::CriterionResult r = cli::run_criterion(n, ctx, seed);
    const bool ok = r.verdict == Verdict::pass;
    if (!ok) ++failures;
    std::printf("criterion %2d %-4s %s [%.2fs] %s\n", r.number, ok ? "PASS" : "FAIL", r.title.c_str(), r.seconds,
                r.summary.c_str());
    for (const cli::CheckOutcome& p : r.problems) {
      std::printf("    %s %s %s\n", std::string(to_string(p.verdict)).c_str(), p.label.c_str(), p.detail.c_str());
    }
  }
  std::printf("%d/%d criteria passed\n", cli::kCriterionCount - failures, cli::kCriterionCount);
  return failures == 0 ? 0 : 1;
}
