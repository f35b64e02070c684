#include "suite.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <random>

#include "commands.hpp"
#include "output.hpp"
#include "sincprod/anomalies.hpp"
#include "sincprod/elementary.hpp"
#include "sincprod/errors.hpp"
#include "sincprod/funceq.hpp"
#include "sincprod/products.hpp"
#include "sincprod/special.hpp"
#include "sincprod/truncation.hpp"

namespace sincprod::cli {
namespace {

// Collects sub-check outcomes for one criterion.
class Checker {
 public:
  explicit Checker(CriterionResult& result) : result_(result) {}

  void record(const std::string& label, Verdict verdict, const std::string& detail) {
    ++result_.checks;
    if (verdict == Verdict::pass) return;
    result_.problems.push_back({label, verdict, detail});
    if (verdict == Verdict::fail) {
      result_.verdict = Verdict::fail;
    } else if (result_.verdict == Verdict::pass) {
      result_.verdict = Verdict::inconclusive;
    }
  }

  void expect(const std::string& label, bool ok, const std::string& detail = "") {
    record(label, ok ? Verdict::pass : Verdict::fail, detail);
  }

  // |lhs - rhs| <= threshold; an inconclusive report stays inconclusive.
  void within(const std::string& label, const VerificationReport& r, const Real& threshold) {
    if (r.verdict == Verdict::inconclusive) {
      record(label, Verdict::inconclusive, r.notes.empty() ? "truncation did not converge" : r.notes.back());
      return;
    }
    track(r.abs_error, threshold);
    const bool ok = r.abs_error <= threshold;
    record(label, ok ? Verdict::pass : Verdict::fail,
           "abs_error " + r.abs_error.to_string(3) + " vs " + threshold.to_string(3));
  }

  void within_relative(const std::string& label, const VerificationReport& r, const Real& threshold) {
    if (r.verdict == Verdict::inconclusive) {
      record(label, Verdict::inconclusive, r.notes.empty() ? "truncation did not converge" : r.notes.back());
      return;
    }
    const bool ok = r.rel_error <= threshold;
    record(label, ok ? Verdict::pass : Verdict::fail,
           "rel_error " + r.rel_error.to_string(3) + " vs " + threshold.to_string(3));
  }

  // Propagates an inconclusive report; returns false when it was one.
  bool usable(const std::string& label, const VerificationReport& r) {
    if (r.verdict != Verdict::inconclusive) return true;
    record(label, Verdict::inconclusive, r.notes.empty() ? "truncation did not converge" : r.notes.back());
    return false;
  }

  void verdict_of(const std::string& label, const VerificationReport& r) {
    record(label, r.verdict, "abs_error " + r.abs_error.to_string(3) + " vs threshold " + r.threshold.to_string(3));
  }

  // Runs `body`, turning library exceptions into a failed sub-check.
  void guard(const std::string& label, const std::function<void()>& body) {
    try {
      body();
    } catch (const NoConvergence& e) {
      record(label, Verdict::inconclusive, e.what());
    } catch (const std::exception& e) {
      record(label, Verdict::fail, std::string("exception: ") + e.what());
    }
  }

  void track(const Real& error, const Real& threshold) {
    if (!threshold.is_zero() && error.is_finite()) {
      const Real ratio = error / threshold;
      if (!worst_ || ratio > *worst_) worst_ = ratio;
    }
  }

  std::string worst() const { return worst_ ? "worst error/threshold " + worst_->to_string(3) : ""; }

 private:
  CriterionResult& result_;
  std::optional<Real> worst_;
};

Real power10(int exponent) { return decimal_tolerance(exponent); }

Real exact_tolerance(int below_digits, const PrecisionContext& ctx) {
  return decimal_tolerance(ctx.digits - below_digits);
}

Real at_least_one(const Value& v) { return max(magnitude(v), Real(1L, 64)); }

std::vector<ExactArgument> random_arguments(std::uint64_t seed, long count) {
  std::vector<ExactArgument> out;
  for (const std::string& s : expand_axis("rand:-3:3:" + std::to_string(count), seed)) {
    out.push_back(ExactArgument::parse(s));
  }
  return out;
}

const char* kTitles[kCriterionCount] = {
    "curious product against a/sin a",
    "hyperbolic twin, sinc form and reciprocity",
    "exceptional points cpodd and peo2",
    "epsilon scaling near exceptional points",
    "exact finite identities",
    "N-plication family and Viete",
    "functional-equation engine",
    "digamma sums",
    "Dobinski closure and Agnew-Walker condition",
    "Weierstrass limit anatomy",
    "special-function substrate",
    "slow Euler product and its tail estimate",
};

void criterion1(Checker& c, const PrecisionContext& ctx, std::uint64_t seed) {
  const Real tol = scaled_tolerance(35, ctx);
  for (const ExactArgument& a : random_arguments(seed, 20)) {
    const std::string label = "vsum2 a=" + a.to_string();
    c.guard(label, [&] {
      const VerificationReport r = vsum2_product(a, ctx);
      c.within(label, r, tol);
      c.expect(label + " terms", r.terms_used <= 140, "terms_used " + std::to_string(r.terms_used));
    });
  }
}

void criterion2(Checker& c, const PrecisionContext& ctx, std::uint64_t seed) {
  const Real tol = scaled_tolerance(35, ctx);
  for (const ExactArgument& a : random_arguments(seed, 20)) {
    const std::string at = " a=" + a.to_string();
    c.guard("vsum2a" + at, [&] {
      c.within("vsum2a" + at, vsum2a_hyperbolic(realize(a, ctx.working_bits()), ctx), tol);
    });
    c.guard("sinc" + at, [&] {
      const VerificationReport tan_form = vsum2_product(a, ctx);
      const VerificationReport cot_form = sinc_cot_product(a, ctx);
      c.within("sinc" + at, cot_form, tol);
      if (tan_form.verdict == Verdict::inconclusive || cot_form.verdict == Verdict::inconclusive) {
        c.record("reciprocity" + at, Verdict::inconclusive, "a product did not converge");
        return;
      }
      const Real product = std::get<Real>(tan_form.lhs) * std::get<Real>(cot_form.lhs);
      const Real dev = abs(product - 1L);
      c.track(dev, tol);
      c.expect("reciprocity" + at, dev <= tol, "|vsum2 * sinc - 1| = " + dev.to_string(3));
      c.within("reciprocity partial" + at, reciprocity_check(a, 140, ctx), tol);
    });
  }
}

void criterion3(Checker& c, const PrecisionContext& ctx, std::uint64_t) {
  const Real tol = scaled_tolerance(30, ctx);
  const Real rel = scaled_tolerance(25, ctx);
  for (long n = 1; n <= 4; ++n) {
    c.guard("cpodd n=" + std::to_string(n), [&] { c.within("cpodd n=" + std::to_string(n), cpodd_product(n, ctx), tol); });
  }
  for (long m = 0; m <= 2; ++m) {
    for (long n = 1; n <= 2; ++n) {
      const std::string label = "peo2 m=" + std::to_string(m) + " n=" + std::to_string(n);
      c.guard(label, [&] { c.within_relative(label, peo2_product(m, n, ctx), rel); });
    }
  }
  for (long n = 1; n <= 2; ++n) {
    const std::string label = "peo2(0," + std::to_string(n) + ") = cpodd(" + std::to_string(n) + ")";
    c.guard(label, [&] {
      const VerificationReport p = peo2_product(0, n, ctx);
      const VerificationReport q = cpodd_product(n, ctx);
      if (!c.usable(label, p) || !c.usable(label, q)) return;
      const Real dev = abs(std::get<Real>(p.lhs) - std::get<Real>(q.lhs));
      c.expect(label, dev <= tol, "difference " + dev.to_string(3));
    });
  }
}

void criterion4(Checker& c, const PrecisionContext& ctx, std::uint64_t) {
  const std::vector<Real> eps{Real::parse("1e-4", 128), Real::parse("1e-5", 128), Real::parse("1e-6", 128)};
  for (long m = 0; m <= 2; ++m) {
    const std::string label = "slope m=" + std::to_string(m) + " n=1";
    c.guard(label, [&] {
      const EpsilonScalingStudy s = epsilon_scaling_study(m, 1, eps, ctx);
      const Real slope = std::get<Real>(s.slope.lhs);
      const Real dev = abs(slope + 1L);
      c.expect(label, dev <= Real::parse("0.05", 64), "slope " + slope.to_string(6));
    });
  }
  c.guard("cp1 n=1 eps=1e-6", [&] {
    const VerificationReport r = cp1_check(1, Real::parse("1e-6", ctx.working_bits()), ctx);
    c.within_relative("cp1 n=1 eps=1e-6", r, Real::parse("1e-3", 64));
  });
}

void criterion5(Checker& c, const PrecisionContext& ctx, std::uint64_t seed) {
  const Real tol = exact_tolerance(8, ctx);
  auto exact = [&](const std::string& label, const std::function<VerificationReport()>& f) {
    c.guard(label, [&] {
      const VerificationReport r = f();
      c.within(label, r, tol * at_least_one(r.rhs));
    });
  };
  std::mt19937_64 rng(seed ^ 0x5eedULL);
  std::uniform_int_distribution<long> start(0, 12);
  std::uniform_int_distribution<long> numerator(-2999, 2999);
  for (int i = 0; i < 10; ++i) {
    const long n1 = start(rng);
    const long n2 = std::uniform_int_distribution<long>(n1 + 1, 24)(rng);
    long num = numerator(rng);
    if (num == 0) num = 1;
    const ExactArgument a = ExactArgument::rational(mpq_class(num, 1000));
    exact("p5 n1=" + std::to_string(n1) + " n2=" + std::to_string(n2) + " a=" + a.to_string(),
          [&] { return finite_p5_product(n1, n2, a, ctx); });
  }
  for (const char* text : {"1", "0.3", "2.2"}) {
    const ExactArgument a = ExactArgument::parse(text);
    exact(std::string("x1 a=") + text, [&] { return x1_identity(a, ctx); });
    for (long n = 1; n <= 6; ++n) {
      exact("x1b n=" + std::to_string(n) + " a=" + text, [&] { return x1b_identity(n, a, ctx); });
    }
  }
  for (long N = 1; N <= 5; ++N) {
    for (long j = 0; j <= 3; ++j) {
      for (const char* text : {"1", "2.2"}) {
        const ExactArgument a = ExactArgument::parse(text);
        const std::string tail = " N=" + std::to_string(N) + " j=" + std::to_string(j) + " a=" + text;
        exact("sumid1" + tail, [&] { return cosine_sum_lemma(Family::even, N, j, a, ctx); });
        exact("sumid2" + tail, [&] { return cosine_sum_lemma(Family::odd, N, j, a, ctx); });
      }
    }
  }
  for (const char* text : {"1", "2.2", "pi/3"}) {
    const ExactArgument a = ExactArgument::parse(text);
    for (long k = 1; k <= 150; ++k) {
      const std::string label = "br114 a=" + std::string(text) + " k=" + std::to_string(k);
      c.guard(label, [&] {
        const VerificationReport r = br114_finite(a, k, ctx);
        // Its own verdict is relative and includes the doubled-precision rerun.
        c.verdict_of(label, r);
        c.within(label, r, tol * at_least_one(r.rhs));
      });
    }
  }
  for (long n = 1; n <= 10; ++n) {
    for (const char* text : {"0.7", "1.3", "pi/5"}) {
      const ExactArgument x = ExactArgument::parse(text);
      exact("h25 n=" + std::to_string(n) + " x=" + text, [&] { return h25_sum(x, n, ctx); });
    }
  }
}

void criterion6(Checker& c, const PrecisionContext& ctx, std::uint64_t) {
  const Real tol = scaled_tolerance(30, ctx);
  for (const char* text : {"1", "pi/2", "2.2"}) {
    const ExactArgument a = ExactArgument::parse(text);
    const std::string at = std::string(" a=") + text;
    for (long q = 2; q <= 11; ++q) {
      c.guard("base " + std::to_string(q) + at,
              [&] { c.within("base " + std::to_string(q) + at, nplication_by_base(q, a, ctx), tol); });
    }
    for (NplicationForm f : {NplicationForm::gn1, NplicationForm::gn3ca, NplicationForm::gn3ci, NplicationForm::gn4a,
                             NplicationForm::gn5b}) {
      const std::string label = std::string(to_string(f)) + at;
      c.guard(label, [&] { c.within(label, nplication_product(f, 1, a, ctx), tol); });
    }
    for (long N = 1; N <= 3; ++N) {
      for (NplicationForm f : {NplicationForm::g2a, NplicationForm::g2x}) {
        const std::string label = std::string(to_string(f)) + " N=" + std::to_string(N) + at;
        c.guard(label, [&] { c.within(label, nplication_product(f, N, a, ctx), tol); });
      }
    }
    c.guard("gn3c factors" + at, [&] {
      c.within("gn3c factors" + at, gn3c_factor_agreement(a, 30, ctx), exact_tolerance(8, ctx));
    });
  }
  c.guard("viete", [&] {
    const PrecisionContext vctx =
        ctx.with_tail_tolerance(scaled_tolerance(32, ctx)).with_max_terms(std::min(ctx.max_terms, 60));
    const VerificationReport r = viete_product(vctx);
    c.within("viete", r, tol);
    c.expect("viete factors", r.terms_used <= 60, "terms_used " + std::to_string(r.terms_used));
  });
}

void criterion7(Checker& c, const PrecisionContext& ctx, std::uint64_t) {
  const Real exact = exact_tolerance(10, ctx);
  for (const char* name : {"geometric", "reciprocal"}) {
    for (const char* text : {"3", "0.5", "2"}) {
      const std::string label = std::string(name) + " a=" + text;
      c.guard(label, [&] {
        const FunceqProblem prob = named_problem(name);
        const Real a = Real::parse(text, ctx.working_bits());
        const Real rhs = closed_form(name, a, ctx);
        const PartialEvaluation f = prob.boundary == Boundary::f_inf_finite ? solve_expanding(prob, a, ctx)
                                                                            : solve_series(prob, a, ctx);
        const Real dev = abs(f.value - rhs);
        c.track(dev, exact * max(abs(rhs), Real(1L, 64)));
        c.expect(label, dev <= exact * max(abs(rhs), Real(1L, 64)), "deviation " + dev.to_string(3));
      });
    }
  }
  const Real tol = scaled_tolerance(25, ctx);
  for (const char* text : {"0.25", "0.5", "0.9"}) {
    const Real a = Real::parse(text, ctx.working_bits());
    c.guard(std::string("rs2 a=") + text, [&] { c.within(std::string("rs2 a=") + text, rs2_check(a, ctx), tol); });
    c.guard(std::string("r0a a=") + text,
            [&] { c.within(std::string("r0a a=") + text, r0a_product_check(a, ctx), tol); });
  }
  const PrecisionContext series_ctx = ctx.with_tail_tolerance(scaled_tolerance(27, ctx));
  for (const char* text : {"0.5", "-0.5"}) {
    const Real a = Real::parse(text, ctx.working_bits());
    for (const char* which : {"eta", "zeta"}) {
      const std::string label = std::string(which) + " series a=" + text;
      c.guard(label, [&] {
        const VerificationReport r =
            std::string(which) == "eta" ? eta_series_check(a, series_ctx) : zeta_series_check(a, series_ctx);
        c.within(label, r, tol);
        if (r.verdict != Verdict::inconclusive) {
          c.expect(label + " terms", r.terms_used <= 120, "terms_used " + std::to_string(r.terms_used));
        }
      });
    }
  }
  for (const char* text : {"0.6", "-0.5", "0.25"}) {
    const Real a = Real::parse(text, ctx.working_bits());
    c.guard(std::string("cm1b a=") + text,
            [&] { c.within(std::string("cm1b a=") + text, cm1b_split_check(a, series_ctx), tol); });
  }
}

void criterion8(Checker& c, const PrecisionContext& ctx, std::uint64_t) {
  const Real tol = scaled_tolerance(30, ctx);
  for (const char* text : {"1", "0.3", "2.5"}) {
    const Real a = Real::parse(text, ctx.working_bits());
    c.guard(std::string("r1bd a=") + text, [&] { c.within(std::string("r1bd a=") + text, r1bd_sum(a, ctx), tol); });
    c.guard(std::string("gn3ad a=") + text,
            [&] { c.within(std::string("gn3ad a=") + text, gn3ad_sum(a, ctx), tol); });
  }
  // Independent closed forms at a = 1.
  c.guard("r1bd(1) = 2", [&] {
    const VerificationReport r = r1bd_sum(Real(1L, ctx.working_bits()), ctx);
    if (!c.usable("r1bd(1) = 2", r)) return;
    const Real dev = abs(std::get<Real>(r.lhs) - 2L);
    c.expect("r1bd(1) = 2", dev <= tol, "deviation " + dev.to_string(3));
  });
  c.guard("gn3ad(1) = 1 - gamma", [&] {
    const VerificationReport r = gn3ad_sum(Real(1L, ctx.working_bits()), ctx);
    if (!c.usable("gn3ad(1) = 1 - gamma", r)) return;
    const Real dev = abs(std::get<Real>(r.lhs) - (1L - euler_constant(ctx.working_bits())));
    c.expect("gn3ad(1) = 1 - gamma", dev <= tol, "deviation " + dev.to_string(3));
  });
}

void criterion9(Checker& c, const PrecisionContext& ctx, std::uint64_t) {
  const Real tol = scaled_tolerance(25, ctx);
  for (const char* text : {"0.3", "1", "pi/3"}) {
    const ExactArgument a = ExactArgument::parse(text);
    for (long J : {5L, 10L, 20L}) {
      const std::string label = std::string("dobinski a=") + text + " J=" + std::to_string(J);
      c.guard(label, [&] { c.within(label, dobinski_closure_check(a, J, ctx), tol); });
    }
    const std::string label = std::string("agnew-walker a=") + text + " J=20";
    c.guard(label, [&] { c.verdict_of(label, agnew_walker_check(a, 20, ctx)); });
  }
}

void criterion10(Checker& c, const PrecisionContext& ctx, std::uint64_t) {
  const Real tol = scaled_tolerance(30, ctx);
  for (const char* text : {"1", "2.2"}) {
    const std::string label = std::string("br114a column a=") + text;
    c.guard(label, [&] {
      const LimitTrajectory t = weierstrass_trajectory(ExactArgument::parse(text), 100, ctx, true);
      Real worst(64);
      for (const TrajectoryRow& r : t.rows) {
        if (r.br114a.is_nan()) continue;
        worst = max(worst, abs(r.br114a - Real::power_of_two(-r.k, r.br114a.precision())));
      }
      c.track(worst, tol);
      c.expect(label, worst <= tol, "max |br114a - 2^-k| = " + worst.to_string(3));
    });
  }
  for (long k = 1; k <= 6; ++k) {
    const std::string label = "case1 n=1 k=" + std::to_string(k);
    c.guard(label, [&] { c.verdict_of(label, case1_expansion_check(1, k, ctx)); });
  }
  for (long m = 1; m <= 8; ++m) {
    for (long k : {m - 1, m, m + 3}) {
      if (k < 1) continue;
      const std::string label = "case2 m=" + std::to_string(m) + " k=" + std::to_string(k);
      c.guard(label, [&] { c.verdict_of(label, case2_zero_factor(m, k, ctx)); });
    }
  }
  c.guard("cauchy windows a=1", [&] {
    const LimitTrajectory t = weierstrass_trajectory(ExactArgument::parse("1"), 200, ctx, true);
    const std::vector<long> missing = windows_without_violation(t, 40);
    std::string list;
    for (long s : missing) list += (list.empty() ? "" : ",") + std::to_string(s);
    c.expect("cauchy windows a=1", missing.empty(),
             std::to_string(t.violations.size()) + " violations; empty windows start at " + list);
  });
}

void criterion11(Checker& c, const PrecisionContext& ctx, std::uint64_t) {
  const Real tol = exact_tolerance(10, ctx);
  for (long n = 2; n <= 5; ++n) {
    for (const char* text : {"0.3", "0.7", "2.5"}) {
      const std::string label = "gauss n=" + std::to_string(n) + " a=" + text;
      c.guard(label, [&] {
        const VerificationReport r = gauss_multiplication_check(n, Real::parse(text, ctx.working_bits()), ctx);
        c.within(label, r, tol * at_least_one(r.rhs));
      });
    }
  }
  // MPFR's zeta is an oracle independent of the eta series used internally.
  const Bits bits = ctx.working_bits();
  const Real eta_tol = decimal_tolerance(ctx.digits);
  for (long n = 2; n <= 12; ++n) {
    const std::string label = "eta(" + std::to_string(n) + ")";
    c.guard(label, [&] {
      Real zeta(bits);
      mpfr_zeta_ui(zeta.get(), static_cast<unsigned long>(n), MPFR_RNDN);
      const Real expected = (1L - Real::power_of_two(1 - n, bits)) * zeta;
      const Real dev = relative_difference(eta_int(n, ctx), expected);
      c.track(dev, eta_tol);
      c.expect(label, dev <= eta_tol, "relative deviation " + dev.to_string(3));
    });
  }
  const int h_digits = ctx.digits / 3;
  const Real psi_tol = decimal_tolerance(h_digits);
  for (const char* text : {"0.3", "1", "2.5", "7.1"}) {
    const std::string label = std::string("digamma x=") + text;
    c.guard(label, [&] {
      const Real x = Real::parse(text, bits);
      const Real h = decimal_tolerance(h_digits).rounded(bits);
      const Real fd = (lngamma(x + h, bits) - lngamma(x - h, bits)) / (2L * h);
      const Real dev = abs(digamma(x, ctx) - fd);
      c.track(dev, psi_tol);
      c.expect(label, dev <= psi_tol, "deviation " + dev.to_string(3));
    });
  }
}

void criterion12(Checker& c, const PrecisionContext& ctx, std::uint64_t) {
  c.guard("euler product a=1 J=10^4", [&] {
    const VerificationReport r = euler_sine_product(ExactArgument::parse("1"), 10000, ctx);
    const Bits bits = ctx.working_bits();
    const Real p = pi(bits);
    const Real stated = Real::parse("1.1", bits) / (p * p * 10000L);
    const Real reported = Real::parse(r.extra("tail_estimate"), bits) * Real::parse("1.1", bits);
    c.track(r.abs_error, reported);
    c.expect("euler product within stated bound", r.abs_error <= stated,
             "error " + r.abs_error.to_string(4) + " vs " + stated.to_string(4));
    c.expect("euler product within reported tail", r.abs_error <= reported,
             "error " + r.abs_error.to_string(4) + " vs 1.1 * tail " + reported.to_string(4));
    // The estimate should be tight, not merely an upper bound.
    c.expect("tail estimate not loose", r.abs_error * 2L >= reported / Real::parse("1.1", bits),
             "error " + r.abs_error.to_string(4));
  });
}

using CriterionFn = void (*)(Checker&, const PrecisionContext&, std::uint64_t);
constexpr CriterionFn kCriteria[kCriterionCount] = {criterion1, criterion2, criterion3, criterion4,
                                                    criterion5, criterion6, criterion7, criterion8,
                                                    criterion9, criterion10, criterion11, criterion12};

}  // namespace

Real scaled_tolerance(int exponent, const PrecisionContext& ctx) {
  const int shortfall = std::max(0, 50 - ctx.digits);
  return power10(exponent - shortfall);
}

CriterionResult run_criterion(int number, const PrecisionContext& ctx, std::uint64_t seed) {
  if (number < 1 || number > kCriterionCount) throw DomainError("no criterion " + std::to_string(number));
  CriterionResult result;
  result.number = number;
  result.title = kTitles[number - 1];
  const auto start = std::chrono::steady_clock::now();
  Checker checker(result);
  kCriteria[number - 1](checker, ctx, seed);
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.summary = std::to_string(result.checks) + " checks";
  if (!checker.worst().empty()) result.summary += ", " + checker.worst();
  return result;
}

std::vector<CriterionResult> run_suite(const PrecisionContext& ctx, std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int n = 1; n <= kCriterionCount; ++n) out.push_back(run_criterion(n, ctx, seed));
  return out;
}

int suite_exit_code(const std::vector<CriterionResult>& results) {
  bool inconclusive = false;
  for (const CriterionResult& r : results) {
    if (r.verdict == Verdict::fail) return kExitFail;
    inconclusive |= r.verdict == Verdict::inconclusive;
  }
  return inconclusive ? kExitInconclusive : kExitPass;
}

int run_suite_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
  PrecisionContext ctx;
  try {
    ctx = config.context();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadParameters;
  }
  const auto start = std::chrono::steady_clock::now();
  std::vector<CriterionResult> results;
  for (int n = 1; n <= kCriterionCount; ++n) {
    results.push_back(run_criterion(n, ctx, config.seed));
    if (config.format == Format::text) {
      const CriterionResult& r = results.back();
      out << (r.verdict == Verdict::pass ? "PASS " : r.verdict == Verdict::fail ? "FAIL " : "INCONCLUSIVE ")
          << r.number << ". " << r.title << " (" << r.summary << ")";
      if (!config.reproducible) out << " " << std::to_string(r.seconds).substr(0, 5) << "s";
      out << "\n";
      for (std::size_t i = 0; i < r.problems.size() && i < 5; ++i) {
        out << "    " << to_string(r.problems[i].verdict) << ": " << r.problems[i].label << ": "
            << r.problems[i].detail << "\n";
      }
      if (r.problems.size() > 5) out << "    ... " << r.problems.size() - 5 << " more\n";
      out.flush();
    }
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const int code = suite_exit_code(results);
  if (config.format == Format::text) {
    out << "suite: " << (code == kExitPass ? "all criteria pass" : code == kExitFail ? "failures" : "inconclusive");
    if (!config.reproducible) out << " in " << std::to_string(total).substr(0, 6) << "s";
    out << "\n";
  } else if (config.format == Format::json) {
    ordered_json j = envelope("suite", config);
    ordered_json list = ordered_json::array();
    for (const CriterionResult& r : results) {
      ordered_json c;
      c["criterion"] = r.number;
      c["title"] = r.title;
      c["verdict"] = std::string(to_string(r.verdict));
      c["checks"] = r.checks;
      c["summary"] = r.summary;
      if (!config.reproducible) c["seconds"] = r.seconds;
      ordered_json problems = ordered_json::array();
      for (const CheckOutcome& p : r.problems) {
        problems.push_back({{"label", p.label}, {"verdict", std::string(to_string(p.verdict))}, {"detail", p.detail}});
      }
      c["problems"] = problems;
      list.push_back(c);
    }
    j["criteria"] = list;
    if (!config.reproducible) j["seconds"] = total;
    j["exit_code"] = code;
    out << j.dump(2) << "\n";
  } else {
    write_csv_preamble(out, "suite", config);
    write_csv_row(out, {"criterion", "title", "verdict", "checks", "problems", "summary", "seconds"});
    for (const CriterionResult& r : results) {
      write_csv_row(out, {std::to_string(r.number), r.title, std::string(to_string(r.verdict)),
                          std::to_string(r.checks), std::to_string(r.problems.size()), r.summary,
                          config.reproducible ? "" : std::to_string(r.seconds)});
    }
  }
  return code;
}

}  // namespace sincprod::cli
