#include "sincprod/catalog.hpp"

#include <charconv>
#include <set>

#include "sincprod/anomalies.hpp"
#include "sincprod/elementary.hpp"
#include "sincprod/errors.hpp"
#include "sincprod/funceq.hpp"
#include "sincprod/products.hpp"

namespace sincprod {

std::string_view to_string(ParamKind kind) {
  switch (kind) {
    case ParamKind::exact: return "exact";
    case ParamKind::real: return "real";
    case ParamKind::integer: return "integer";
    case ParamKind::list: return "list";
    case ParamKind::name: return "name";
  }
  return "?";
}

const std::string& Params::text(const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end()) throw DomainError("missing parameter '" + name + "'");
  return it->second;
}

ExactArgument Params::exact(const std::string& name) const { return ExactArgument::parse(text(name)); }

Real Params::real(const std::string& name) const { return realize(exact(name), ctx_.working_bits()); }

long Params::integer(const std::string& name) const {
  const std::string& t = text(name);
  long out = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
  if (ec != std::errc() || ptr != t.data() + t.size()) {
    throw DomainError("parameter '" + name + "' must be an integer, got '" + t + "'");
  }
  return out;
}

std::vector<Real> Params::list(const std::string& name) const {
  std::vector<Real> out;
  const std::string& t = text(name);
  std::size_t start = 0;
  while (start <= t.size()) {
    const std::size_t comma = t.find(',', start);
    const std::string item = t.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (item.empty()) throw DomainError("empty item in list parameter '" + name + "'");
    out.push_back(realize(ExactArgument::parse(item), ctx_.working_bits()));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

ParamMap IdentitySpec::complete(const ParamMap& given) const {
  ParamMap out;
  std::set<std::string> known;
  for (const ParamSpec& p : params) {
    known.insert(p.name);
    auto it = given.find(p.name);
    if (it != given.end()) {
      out[p.name] = it->second;
    } else if (!p.default_value.empty()) {
      out[p.name] = p.default_value;
    } else {
      throw DomainError(id + ": missing required parameter '" + p.name + "'");
    }
  }
  for (const auto& [key, value] : given) {
    if (!known.count(key)) throw DomainError(id + ": unknown parameter '" + key + "'");
  }
  return out;
}

namespace {

using P = ParamSpec;
constexpr auto kExact = ParamKind::exact;
constexpr auto kReal = ParamKind::real;
constexpr auto kInt = ParamKind::integer;
constexpr auto kList = ParamKind::list;

NplicationForm form_named(std::string_view id) {
  for (NplicationForm f : {NplicationForm::g2a, NplicationForm::g2x, NplicationForm::gn1, NplicationForm::gn4a,
                           NplicationForm::gn3ca, NplicationForm::gn3ci, NplicationForm::gn5b}) {
    if (to_string(f) == id) return f;
  }
  throw DomainError("unknown N-plication form");
}

VerificationReport epsilon_scaling_report(const Params& p, const PrecisionContext& ctx) {
  EpsilonScalingStudy study = epsilon_scaling_study(p.integer("m"), p.integer("n"), p.list("eps"), ctx);
  VerificationReport out = study.slope;
  out.add_extra("cp1_verdict", std::string(to_string(study.cp1.verdict)));
  out.add_extra("cp1_rel_error", study.cp1.rel_error.to_string(6));
  return out;
}

VerificationReport funceq_toy(const Params& p, const PrecisionContext& ctx) {
  const std::string name = p.text("problem");
  const FunceqProblem problem = named_problem(name);
  if (!has_closed_form(name)) throw DomainError("funceq problem '" + name + "' has no closed form to verify");
  const Real a = p.real("a");
  const Real rhs = closed_form(name, a, ctx);
  KeyValues params{{"problem", name}, {"a", p.text("a")}};
  try {
    const PartialEvaluation f = problem.boundary == Boundary::f_inf_finite ? solve_expanding(problem, a, ctx)
                                                                           : solve_series(problem, a, ctx);
    VerificationReport r = make_report("funceq", params, f.value, rhs, ctx, f.terms_used, f.tail_bound);
    r.add_extra("boundary", std::string(to_string(problem.boundary)));
    return r;
  } catch (const NoConvergence& e) {
    return inconclusive_report("funceq", params, e.partial(), rhs, e.what());
  }
}

std::vector<IdentitySpec> build() {
  std::vector<IdentitySpec> c;
  auto add = [&](std::string id, std::string description, std::vector<ParamSpec> params,
                 std::function<VerificationReport(const Params&, const PrecisionContext&)> fn) {
    c.push_back(IdentitySpec{std::move(id), std::move(description), std::move(params), std::move(fn)});
  };

  // Curious products and their exceptional points.
  add("vsum2", "prod_{j>=1} (2^j tan(a/2^j)/a)^(2^(j-1)) = a / sin a", {P{"a", kExact, "", "non pi-multiple"}},
      [](const Params& p, const PrecisionContext& ctx) { return vsum2_product(p.exact("a"), ctx); });
  add("vsum2a", "hyperbolic twin: tanh form equals b / sinh b", {P{"b", kReal, "", "real b != 0"}},
      [](const Params& p, const PrecisionContext& ctx) { return vsum2a_hyperbolic(p.real("b"), ctx); });
  add("sinc", "cot form of sin a / a", {P{"a", kExact, "", "non pi-multiple"}},
      [](const Params& p, const PrecisionContext& ctx) { return sinc_cot_product(p.exact("a"), ctx); });
  add("reciprocity", "vsum2 times the sinc form equals 1", {P{"a", kExact, "", ""}, P{"terms", kInt, "40", "partial-product length"}},
      [](const Params& p, const PrecisionContext& ctx) {
        return reciprocity_check(p.exact("a"), static_cast<int>(p.integer("terms")), ctx);
      });
  add("cpodd", "product at a = (2n-1) pi against pi^2 (1/2 - n)^2", {P{"n", kInt, "", "n >= 1"}},
      [](const Params& p, const PrecisionContext& ctx) { return cpodd_product(p.integer("n"), ctx); });
  add("peo2", "product at a = 2^m (2n-1) pi against ((2n-1) pi / 2)^(2^(m+1))",
      {P{"m", kInt, "", "m >= 0"}, P{"n", kInt, "", "n >= 1"}},
      [](const Params& p, const PrecisionContext& ctx) { return peo2_product(p.integer("m"), p.integer("n"), ctx); });
  add("cp1", "first-factor pole law -2/(pi^2 (2n-1) eps)", {P{"n", kInt, "1", ""}, P{"eps", kReal, "1e-6", ""}},
      [](const Params& p, const PrecisionContext& ctx) { return cp1_check(p.integer("n"), p.real("eps"), ctx); });
  add("epsilon_scaling", "slope of ln|product| against ln eps near a = 2^m (2n-1) pi",
      {P{"m", kInt, "0", ""}, P{"n", kInt, "1", ""}, P{"eps", kList, "1e-4,1e-5,1e-6", "comma list"}},
      epsilon_scaling_report);
  add("gp1b", "induction generalization to n halvings", {P{"n", kInt, "", "n >= 1"}, P{"a", kExact, "", ""}},
      [](const Params& p, const PrecisionContext& ctx) { return gp1b_product(p.integer("n"), p.exact("a"), ctx); });
  add("gp1b_induction", "induction step P(n) -> P(n+1)", {P{"n", kInt, "", ""}, P{"a", kExact, "", ""}},
      [](const Params& p, const PrecisionContext& ctx) {
        return gp1b_induction_step(p.integer("n"), p.exact("a"), ctx);
      });

  // Finite telescoping identities.
  add("p5", "finite telescoping product over n1 <= j < n2",
      {P{"n1", kInt, "", "0 <= n1"}, P{"n2", kInt, "", "n1 < n2 <= 24"}, P{"a", kExact, "", ""}},
      [](const Params& p, const PrecisionContext& ctx) {
        return finite_p5_product(p.integer("n1"), p.integer("n2"), p.exact("a"), ctx);
      });
  add("x1", "tan/cot duplication instance", {P{"a", kExact, "", ""}},
      [](const Params& p, const PrecisionContext& ctx) { return x1_identity(p.exact("a"), ctx); });
  add("x1a", "x1 variant", {P{"a", kExact, "", ""}},
      [](const Params& p, const PrecisionContext& ctx) { return x1a_identity(p.exact("a"), ctx); });
  add("x1b", "x1 to n levels", {P{"n", kInt, "", ""}, P{"a", kExact, "", ""}},
      [](const Params& p, const PrecisionContext& ctx) { return x1b_identity(p.integer("n"), p.exact("a"), ctx); });
  add("sin2a", "double angle check", {P{"a", kExact, "", ""}},
      [](const Params& p, const PrecisionContext& ctx) { return sin2a_identity(p.exact("a"), ctx); });
  add("br114", "prod_{j<k} cos(2^j a) = sin(2^k a) / (2^k sin a)", {P{"a", kExact, "", ""}, P{"k", kInt, "", ""}},
      [](const Params& p, const PrecisionContext& ctx) { return br114_finite(p.exact("a"), p.integer("k"), ctx); });
  add("jo1", "finite cosine product at pi/2^n", {P{"n", kInt, "", "n >= 1"}},
      [](const Params& p, const PrecisionContext& ctx) { return jo1_product(p.integer("n"), ctx); });
  add("jo2", "prod_{j<2k} cos(j pi / k) closed form", {P{"k", kInt, "", "k >= 1"}},
      [](const Params& p, const PrecisionContext& ctx) { return jo2_product(p.integer("k"), ctx); });
  add("h25", "finite cosine sum", {P{"x", kExact, "", ""}, P{"n", kInt, "", "n >= 1"}},
      [](const Params& p, const PrecisionContext& ctx) { return h25_sum(p.exact("x"), p.integer("n"), ctx); });
  add("also", "power-of-two sum companion", {P{"n", kInt, "", ""}, P{"a", kExact, "", ""}},
      [](const Params& p, const PrecisionContext& ctx) { return also_identity(p.integer("n"), p.exact("a"), ctx); });

  // N-plication family.
  for (NplicationForm f : {NplicationForm::g2a, NplicationForm::g2x}) {
    const std::string id(to_string(f));
    add(id, id + " N-plication product against sin a / a", {P{"N", kInt, "", "N >= 1"}, P{"a", kExact, "", ""}},
        [f](const Params& p, const PrecisionContext& ctx) {
          return nplication_product(f, p.integer("N"), p.exact("a"), ctx);
        });
  }
  for (NplicationForm f : {NplicationForm::gn1, NplicationForm::gn4a, NplicationForm::gn3ca, NplicationForm::gn3ci,
                           NplicationForm::gn5b}) {
    const std::string id(to_string(f));
    add(id, id + " specialization against sin a / a", {P{"a", kExact, "", ""}},
        [id](const Params& p, const PrecisionContext& ctx) {
          return nplication_product(form_named(id), 1, p.exact("a"), ctx);
        });
  }
  add("nplication", "base-q product against sin a / a", {P{"q", kInt, "", "q >= 2"}, P{"a", kExact, "", ""}},
      [](const Params& p, const PrecisionContext& ctx) { return nplication_by_base(p.integer("q"), p.exact("a"), ctx); });
  add("gn3c_factors", "Gn3cA and Gn3cI factors agree", {P{"a", kExact, "", ""}, P{"terms", kInt, "20", ""}},
      [](const Params& p, const PrecisionContext& ctx) {
        return gn3c_factor_agreement(p.exact("a"), static_cast<int>(p.integer("terms")), ctx);
      });
  add("viete", "nested radicals against 2 / pi", {},
      [](const Params&, const PrecisionContext& ctx) { return viete_product(ctx); });
  add("sumid1", "even-family cosine sum lemma",
      {P{"N", kInt, "", ""}, P{"j", kInt, "", ""}, P{"a", kExact, "", ""}},
      [](const Params& p, const PrecisionContext& ctx) {
        return cosine_sum_lemma(Family::even, p.integer("N"), p.integer("j"), p.exact("a"), ctx);
      });
  add("sumid2", "odd-family cosine sum lemma",
      {P{"N", kInt, "", ""}, P{"j", kInt, "", ""}, P{"a", kExact, "", ""}},
      [](const Params& p, const PrecisionContext& ctx) {
        return cosine_sum_lemma(Family::odd, p.integer("N"), p.integer("j"), p.exact("a"), ctx);
      });
  add("euler_product", "Euler's slow product for sin a, fixed term count",
      {P{"a", kExact, "", ""}, P{"terms", kInt, "10000", ""}},
      [](const Params& p, const PrecisionContext& ctx) {
        return euler_sine_product(p.exact("a"), p.integer("terms"), ctx);
      });

  // Sums.
  add("vsum3", "log-derivative sum of vsum2", {P{"a", kExact, "", ""}},
      [](const Params& p, const PrecisionContext& ctx) { return vsum3_sum(p.exact("a"), ctx); });
  add("r1bd", "digamma difference sum", {P{"a", kReal, "", "a > -1"}},
      [](const Params& p, const PrecisionContext& ctx) { return r1bd_sum(p.real("a"), ctx); });
  add("gn3ad", "digamma sum against 1 - gamma at a = 1", {P{"a", kReal, "", "a > -1"}},
      [](const Params& p, const PrecisionContext& ctx) { return gn3ad_sum(p.real("a"), ctx); });

  // Functional equation applications.
  add("rs2", "sum of lnGamma duplication defects", {P{"a", kReal, "", ""}},
      [](const Params& p, const PrecisionContext& ctx) { return rs2_check(p.real("a"), ctx); });
  add("r0a", "Gamma product against exp(-2 gamma a)", {P{"a", kReal, "", "a > -1/2"}},
      [](const Params& p, const PrecisionContext& ctx) { return r0a_product_check(p.real("a"), ctx); });
  add("eta_series", "sum eta(1+j) (-a)^j / (1+j)", {P{"a", kReal, "", "|a| < 1"}},
      [](const Params& p, const PrecisionContext& ctx) { return eta_series_check(p.real("a"), ctx); });
  add("zeta_series", "sum zeta(1+j) (-a)^j / (1+j)", {P{"a", kReal, "", "|a| < 1"}},
      [](const Params& p, const PrecisionContext& ctx) { return zeta_series_check(p.real("a"), ctx); });
  add("cm1b", "splitting of the zeta series into eta and half-argument parts", {P{"a", kReal, "", "|a| < 1"}},
      [](const Params& p, const PrecisionContext& ctx) { return cm1b_split_check(p.real("a"), ctx); });
  add("duplication", "Legendre duplication in log form", {P{"a", kReal, "", "a > -1/2"}},
      [](const Params& p, const PrecisionContext& ctx) { return duplication_check(p.real("a"), ctx); });
  add("gauss_multiplication", "Gauss multiplication in log form", {P{"n", kInt, "", "n >= 2"}, P{"a", kReal, "", "a > 0"}},
      [](const Params& p, const PrecisionContext& ctx) {
        return gauss_multiplication_check(p.integer("n"), p.real("a"), ctx);
      });
  add("funceq", "named functional-equation problem against its closed form",
      {P{"problem", ParamKind::name, "", "geometric, square, reciprocal, inverse_square"}, P{"a", kReal, "", ""}}, funceq_toy);

  // Anomalies.
  add("dobinski_closure", "branch-aware Dobinski closure", {P{"a", kExact, "", ""}, P{"J", kInt, "20", ""}},
      [](const Params& p, const PrecisionContext& ctx) {
        return dobinski_closure_check(p.exact("a"), p.integer("J"), ctx);
      });
  add("agnew_walker", "modulus of sin(2^(1+J) a)^(2^-J) near 1", {P{"a", kExact, "", ""}, P{"J", kInt, "20", ""}},
      [](const Params& p, const PrecisionContext& ctx) { return agnew_walker_check(p.exact("a"), p.integer("J"), ctx); });
  add("case1", "quadratic coefficient of the cosine product at 2^n pi", {P{"n", kInt, "1", ""}, P{"k", kInt, "", ""}},
      [](const Params& p, const PrecisionContext& ctx) {
        return case1_expansion_check(p.integer("n"), p.integer("k"), ctx);
      });
  add("case2", "vanishing factor of the cosine product at pi/2^m", {P{"m", kInt, "", ""}, P{"k", kInt, "", ""}},
      [](const Params& p, const PrecisionContext& ctx) {
        return case2_zero_factor(p.integer("m"), p.integer("k"), ctx);
      });
  add("jo2_zeros", "zero anatomy of jo2 for even k", {P{"k", kInt, "", "even k"}},
      [](const Params& p, const PrecisionContext& ctx) { return jo2_zero_anatomy(p.integer("k"), ctx); });
  return c;
}

}  // namespace

const std::vector<IdentitySpec>& identity_catalog() {
  static const std::vector<IdentitySpec> catalog = build();
  return catalog;
}

const IdentitySpec* find_identity(std::string_view id) {
  for (const IdentitySpec& spec : identity_catalog()) {
    if (spec.id == id) return &spec;
  }
  return nullptr;
}

VerificationReport evaluate_identity(const IdentitySpec& spec, const ParamMap& given, const PrecisionContext& ctx) {
  ctx.validate();
  const Params params(spec.complete(given), ctx);
  return spec.evaluate(params, ctx);
}

}  // namespace sincprod
