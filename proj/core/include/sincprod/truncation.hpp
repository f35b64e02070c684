#pragma once

#include <functional>

#include "sincprod/errors.hpp"
#include "sincprod/precision.hpp"
#include "sincprod/real.hpp"

namespace sincprod {

// Value of a truncated sum or product together with how it was truncated.
// converged implies tail_bound <= ctx.tail_tolerance and
// terms_used <= ctx.max_terms.
struct PartialEvaluation {
  Real value;
  int terms_used = 0;
  // |last summand| for sums, |last factor - 1| for products.
  Real last_term_deviation;
  Real tail_bound;
  bool converged = false;
};

class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, PartialEvaluation partial)
      : Error(what), partial_(std::move(partial)) {}
  const PartialEvaluation& partial() const { return partial_; }

 private:
  PartialEvaluation partial_;
};

// Geometric-dominance stopping rule: stop after term j when
// |t_j| < tail_tolerance, |t_j| <= r |t_{j-1}| with r <= max_ratio, and the
// tail estimate |t_j| r / (1 - r) is itself below tail_tolerance.
struct TruncationRule {
  double max_ratio = 0.75;
};

// sum_{j >= first} term(j). Throws NoConvergence (carrying the partial sum)
// once ctx.max_terms terms have been used without meeting the rule.
PartialEvaluation sum_series(const std::function<Real(long)>& term, long first, const PrecisionContext& ctx,
                             TruncationRule rule = {});

// One factor of a product, given as ln|factor| (already raised to its
// exponent) and the sign of the powered factor.
struct SignedLog {
  Real log_abs;
  bool negative = false;
};

struct ProductEvaluation {
  Real value;         // sign * exp(log_sum.value)
  PartialEvaluation log_sum;
  bool negative = false;
  // |value| * (exp(log_sum.tail_bound) - 1)
  Real tail_bound;
};

// prod_{j >= first} factor(j), accumulated as a sum of logarithms so that
// towering exponents such as 2^(j-1) neither overflow nor underflow.
ProductEvaluation multiply_series(const std::function<SignedLog(long)>& factor, long first,
                                  const PrecisionContext& ctx, TruncationRule rule = {});

}  // namespace sincprod
