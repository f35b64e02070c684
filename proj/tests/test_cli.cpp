#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "config.hpp"
#include "json.hpp"
#include "sincprod/errors.hpp"
#include "suite.hpp"

namespace sincprod::cli {
namespace {

RunConfig reproducible(Format format = Format::json) {
  RunConfig c;
  c.digits = 30;
  c.reproducible = true;
  c.format = format;
  c.threads = 4;
  return c;
}

TEST(Axis, Linspace) {
  const auto v = expand_axis("0:1:5", 1);
  ASSERT_EQ(v.size(), 5u);
  EXPECT_EQ(ExactArgument::parse(v[0]), ExactArgument::rational(0));
  EXPECT_EQ(ExactArgument::parse(v[1]), ExactArgument::rational(mpq_class(1, 4)));
  EXPECT_EQ(ExactArgument::parse(v[4]), ExactArgument::rational(1));
  EXPECT_EQ(expand_axis("0.1:3.0:30", 1).size(), 30u);
}

TEST(Axis, ListsSinglesAndRandom) {
  EXPECT_EQ(expand_axis("1,pi/3,2", 1), (std::vector<std::string>{"1", "pi/3", "2"}));
  EXPECT_EQ(expand_axis("pi/3", 1), (std::vector<std::string>{"pi/3"}));
  const auto r1 = expand_axis("rand:-3:3:20", 99);
  EXPECT_EQ(r1.size(), 20u);
  EXPECT_EQ(r1, expand_axis("rand:-3:3:20", 99));
  EXPECT_NE(r1, expand_axis("rand:-3:3:20", 100));
  for (const std::string& s : r1) {
    const mpq_class q = ExactArgument::parse(s).rational_part();
    EXPECT_GT(q, -3);
    EXPECT_LT(q, 3);
    EXPECT_NE(sgn(q), 0);
  }
  EXPECT_TRUE(expand_axis("0:1:0", 1).empty());
  EXPECT_THROW(expand_axis("1:2", 1), DomainError);
}

TEST(Grid, RowMajorFirstAxisOutermost) {
  const Grid g = build_grid(*find_identity("peo2"), {{"m", "0,1"}, {"n", "1:3:3"}}, 1);
  ASSERT_EQ(g.points.size(), 6u);
  EXPECT_EQ(g.points[0].at("m"), "0");
  EXPECT_EQ(g.points[1].at("n"), "2");
  EXPECT_EQ(g.points[3].at("m"), "1");
  EXPECT_EQ(g.points[3].at("n"), "1");
}

TEST(Grid, ListParametersStayWhole) {
  const Grid g = build_grid(*find_identity("epsilon_scaling"), {{"eps", "1e-4,1e-5,1e-6"}}, 1);
  ASSERT_EQ(g.points.size(), 1u);
  EXPECT_EQ(g.points[0].at("eps"), "1e-4,1e-5,1e-6");
}

TEST(ExitCodes, Mapping) {
  EXPECT_EQ(exit_code_for(Verdict::pass), 0);
  EXPECT_EQ(exit_code_for(Verdict::fail), 2);
  EXPECT_EQ(exit_code_for(Verdict::inconclusive), 3);
  std::ostringstream out, err;
  EXPECT_EQ(run_verify("nope", {}, reproducible(), out, err), kExitUnknownIdentity);
  EXPECT_EQ(run_verify("vsum2", {{"a", "pi"}}, reproducible(), out, err), kExitBadParameters);
  EXPECT_NE(err.str().find("cpodd"), std::string::npos);
  EXPECT_EQ(run_verify("vsum2", {{"zzz", "1"}}, reproducible(), out, err), kExitBadParameters);
  EXPECT_EQ(run_trace("spiral", {}, reproducible(), out, err), kExitUnknownIdentity);
  EXPECT_EQ(run_sweep("vsum2", {{"a", "0:1:0"}}, reproducible(), out, err), kExitBadParameters);
  RunConfig tight = reproducible();
  tight.max_terms = 4;
  EXPECT_EQ(run_verify("vsum2", {{"a", "1"}}, tight, out, err), kExitInconclusive);
}

TEST(Verify, JsonReportCarriesSchema) {
  std::ostringstream out, err;
  ASSERT_EQ(run_verify("vsum2", {{"a", "1"}}, reproducible(), out, err), 0);
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_EQ(j.at("schema"), kSchema);
  EXPECT_EQ(j.at("command"), "verify");
  EXPECT_FALSE(j.contains("generated_at"));
  EXPECT_EQ(j.at("report").at("verdict"), "pass");
  EXPECT_EQ(j.at("report").at("rhs").get<std::string>().substr(0, 12), "1.1883951057");
}

TEST(Verify, ReproducibleOutputIsByteIdentical) {
  std::ostringstream a, b, err;
  run_sweep("vsum2", {{"a", "0.1:3.0:12"}}, reproducible(), a, err);
  RunConfig serial = reproducible();
  serial.threads = 1;
  run_sweep("vsum2", {{"a", "0.1:3.0:12"}}, serial, b, err);
  EXPECT_EQ(a.str(), b.str());
  std::ostringstream c, d;
  run_verify("jo2", {{"k", "1"}}, reproducible(), c, err);
  run_verify("jo2", {{"k", "1"}}, reproducible(), d, err);
  EXPECT_EQ(c.str(), d.str());
}

TEST(Sweep, CsvRowsInGridOrder) {
  std::ostringstream out, err;
  ASSERT_EQ(run_sweep("vsum2", {{"a", "0.1:3.0:30"}}, reproducible(Format::csv), out, err), 0);
  std::istringstream lines(out.str());
  std::string line;
  int rows = 0;
  std::getline(lines, line);
  EXPECT_EQ(line.rfind("# sincprod.report/1", 0), 0u);
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    if (!line.empty()) ++rows;
  }
  EXPECT_EQ(rows, 30);
}

TEST(Trace, WeierstrassCsv) {
  std::ostringstream out, err;
  ASSERT_EQ(run_trace("weierstrass", {{"a", "1"}, {"kmax", "60"}}, reproducible(Format::csv), out, err), 0);
  EXPECT_NE(out.str().find("br114a"), std::string::npos);
  EXPECT_NE(out.str().find("0.0009765625"), std::string::npos);
}

TEST(Funceq, NamedAndCustom) {
  std::ostringstream out, err;
  ASSERT_EQ(run_funceq("geometric", {{"a", "3"}}, reproducible(), out, err), 0);
  EXPECT_NE(out.str().find("\"4"), std::string::npos);
  std::ostringstream o2;
  EXPECT_EQ(run_funceq("custom", {{"g", "sin"}, {"x", "0.5"}, {"p", "2"}, {"boundary", "f0_finite"}, {"a", "1"}},
                       reproducible(), o2, err),
            0);
}

TEST(Config, SourcesAndValidation) {
  RunConfig c;
  c.set("digits", "60");
  c.set("max-terms", "100");
  c.set("tol", "1e-45");
  EXPECT_EQ(c.context().digits, 60);
  EXPECT_EQ(c.context().max_terms, 100);
  EXPECT_EQ(c.context().tail_tolerance, Real::parse("1e-45", 64));
  EXPECT_THROW(c.set("colour", "blue"), ConfigError);
  EXPECT_THROW(c.set("digits", "abc"), ConfigError);
  c.set("digits", "5");
  EXPECT_THROW(c.context(), ConfigError);

  const std::string path = ::testing::TempDir() + "sincprod_test.conf";
  {
    std::ofstream f(path);
    f << "# comment\ndigits = 40\nformat = csv\n";
  }
  RunConfig fromfile;
  fromfile.load_file(path);
  EXPECT_EQ(fromfile.digits, 40);
  EXPECT_EQ(fromfile.format, Format::csv);

  setenv("SINCPROD_GUARD_DIGITS", "12", 1);
  RunConfig env;
  env.load_environment();
  unsetenv("SINCPROD_GUARD_DIGITS");
  EXPECT_EQ(env.guard_digits, 12);
}

TEST(Suite, ToleranceScaling) {
  const PrecisionContext c50 = PrecisionContext::with_digits(50);
  const PrecisionContext c20 = PrecisionContext::with_digits(20);
  EXPECT_EQ(scaled_tolerance(35, c50), decimal_tolerance(35));
  EXPECT_EQ(scaled_tolerance(35, c20), decimal_tolerance(5));
  EXPECT_EQ(scaled_tolerance(35, PrecisionContext::with_digits(80)), decimal_tolerance(35));
}

TEST(Suite, ForcedTruncationIsInconclusive) {
  PrecisionContext c = PrecisionContext::with_digits(50);
  c.max_terms = 4;
  const CriterionResult r = run_criterion(1, c, 1);
  EXPECT_EQ(r.verdict, Verdict::inconclusive);
}

}  // namespace
}  // namespace sincprod::cli
