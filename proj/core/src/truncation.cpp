#include "sincprod/truncation.hpp"

#include <algorithm>
#include <string>

namespace sincprod {

PartialEvaluation sum_series(const std::function<Real(long)>& term, long first, const PrecisionContext& ctx,
                             TruncationRule rule) {
  const Bits acc_bits = ctx.working_bits() + 16;
  const Real max_ratio = Real::from_double(rule.max_ratio, 64);

  PartialEvaluation out;
  out.value = Real(acc_bits);
  out.last_term_deviation = Real(acc_bits);
  out.tail_bound = Real(acc_bits);

  Real previous(acc_bits);
  bool have_previous = false;
  for (long j = first; out.terms_used < ctx.max_terms; ++j) {
    Real t = term(j);
    out.value += t;
    ++out.terms_used;
    Real magnitude = abs(t);
    out.last_term_deviation = magnitude;

    if (have_previous && magnitude < ctx.tail_tolerance) {
      if (magnitude.is_zero()) {
        out.tail_bound = Real(acc_bits);
        out.converged = true;
        return out;
      }
      if (!previous.is_zero()) {
        Real ratio = magnitude / previous;
        if (ratio <= max_ratio) {
          Real tail = magnitude * ratio / (1L - ratio);
          if (tail <= ctx.tail_tolerance) {
            out.tail_bound = tail;
            out.converged = true;
            return out;
          }
        }
      }
    }
    previous = magnitude;
    have_previous = true;
  }
  out.tail_bound = out.last_term_deviation;
  throw NoConvergence("no convergence within " + std::to_string(ctx.max_terms) + " terms", out);
}

namespace {

ProductEvaluation finish_product(PartialEvaluation log_sum, bool negative) {
  ProductEvaluation out;
  out.value = exp(log_sum.value);
  if (negative) out.value = -out.value;
  out.tail_bound = abs(out.value) * expm1(log_sum.tail_bound.rounded(out.value.precision()));
  // For products the natural deviation is |factor - 1|.
  log_sum.last_term_deviation = abs(expm1(log_sum.last_term_deviation));
  out.log_sum = std::move(log_sum);
  out.negative = negative;
  return out;
}

}  // namespace

ProductEvaluation multiply_series(const std::function<SignedLog(long)>& factor, long first,
                                  const PrecisionContext& ctx, TruncationRule rule) {
  bool negative = false;
  auto term = [&](long j) {
    SignedLog f = factor(j);
    if (f.negative) negative = !negative;
    return f.log_abs;
  };
  try {
    PartialEvaluation log_sum = sum_series(term, first, ctx, rule);
    return finish_product(std::move(log_sum), negative);
  } catch (const NoConvergence& e) {
    ProductEvaluation partial = finish_product(e.partial(), negative);
    PartialEvaluation carried = partial.log_sum;
    carried.value = partial.value;
    carried.tail_bound = partial.tail_bound;
    throw NoConvergence(e.what(), carried);
  }
}

}  // namespace sincprod
