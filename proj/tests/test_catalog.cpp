#include <gtest/gtest.h>

#include <set>

#include "sincprod/catalog.hpp"
#include "sincprod/errors.hpp"

namespace sincprod {
namespace {

TEST(Catalog, IdsAreUniqueAndDocumented) {
  std::set<std::string> seen;
  for (const IdentitySpec& spec : identity_catalog()) {
    EXPECT_TRUE(seen.insert(spec.id).second) << spec.id;
    EXPECT_FALSE(spec.description.empty()) << spec.id;
    EXPECT_TRUE(static_cast<bool>(spec.evaluate)) << spec.id;
  }
  for (const char* id : {"vsum2", "peo2", "g2x", "cpodd", "br114", "jo1", "jo2", "viete", "euler_product", "r0a",
                         "eta_series", "zeta_series", "dobinski_closure", "case1", "case2", "epsilon_scaling"}) {
    EXPECT_NE(find_identity(id), nullptr) << id;
  }
  EXPECT_EQ(find_identity("nope"), nullptr);
}

TEST(Catalog, CompleteFillsDefaultsAndRejectsStrays) {
  const IdentitySpec& cp1 = *find_identity("cp1");
  const ParamMap filled = cp1.complete({});
  EXPECT_EQ(filled.at("n"), "1");
  EXPECT_THROW(cp1.complete({{"bogus", "1"}}), DomainError);
  EXPECT_THROW(find_identity("vsum2")->complete({}), DomainError);
}

TEST(Catalog, EveryEntryEvaluatesAtItsDefaults) {
  // Required parameters get a harmless regular value.
  const PrecisionContext ctx = PrecisionContext::with_digits(30);
  const ParamMap fill{{"a", "0.7"}, {"b", "1.1"}, {"n", "2"}, {"m", "1"}, {"k", "2"}, {"N", "2"},  {"j", "1"},
                      {"q", "3"},   {"x", "0.9"}, {"n1", "1"}, {"n2", "3"}, {"problem", "square"}};
  for (const IdentitySpec& spec : identity_catalog()) {
    ParamMap given;
    for (const ParamSpec& p : spec.params) {
      if (p.default_value.empty()) given[p.name] = fill.at(p.name);
    }
    VerificationReport r;
    ASSERT_NO_THROW(r = evaluate_identity(spec, given, ctx)) << spec.id;
    EXPECT_NE(r.verdict, Verdict::fail) << spec.id;
  }
}

TEST(Catalog, ParamsParsing) {
  const PrecisionContext ctx = PrecisionContext::with_digits(20);
  const Params p({{"a", "pi/3"}, {"n", "12"}, {"eps", "1e-4,1e-5"}, {"bad", "1.5"}}, ctx);
  EXPECT_EQ(p.exact("a"), ExactArgument::parse("pi/3"));
  EXPECT_EQ(p.integer("n"), 12);
  EXPECT_EQ(p.list("eps").size(), 2u);
  EXPECT_THROW(p.integer("bad"), DomainError);
  EXPECT_THROW(p.text("missing"), DomainError);
}

TEST(Catalog, PiMultiplesRedirect) {
  const PrecisionContext ctx = PrecisionContext::with_digits(30);
  EXPECT_THROW(evaluate_identity(*find_identity("vsum2"), {{"a", "pi"}}, ctx), ExceptionalPoint);
}

}  // namespace
}  // namespace sincprod
