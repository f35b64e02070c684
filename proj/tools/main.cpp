// sincprod: verify, sweep and trace the sinc product identities.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "cli/suite.hpp"
#include "sincprod/errors.hpp"

using namespace sincprod::cli;

namespace {

const char* kTraceHelp = R"(Trace kinds and CSV columns (JSON rows use the same keys):
  dobinski    a= J=        j, tan, complex_branch, factor_re, factor_im, partial_re,
                           partial_im, target, target_deviation, closure_re, closure_im,
                           closure_modulus, closure_deviation, phase,
                           branch_closure_deviation, agnew_walker_re, agnew_walker_im
  weierstrass a= kmax= [window=40] [allow_expensive=0]
                           k, lhs, rhs, identity_deviation, br114a, two_pow_minus_k,
                           br114a_deviation, cauchy_violation
  telescoping N= a= J=     j, factor, nplication_factor, cumulative, closed_form,
                           limit_ratio)";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"High-precision verification of sinc product identities"};
  app.require_subcommand(1);
  app.fallthrough();

  int digits = 0;
  std::string tol, rel_tol, format, output, config_file;
  int max_terms = 0, threads = -1;
  long long seed = -1;
  bool reproducible = false;
  app.add_option("--digits", digits, "Working decimal digits (default 50)");
  app.add_option("--tol", tol, "Tail tolerance (default 10^-(digits-10))");
  app.add_option("--rel-tol", rel_tol, "Relative tolerance (default 10^-(digits-10))");
  app.add_option("--max-terms", max_terms, "Term cap for infinite products and series (default 256)");
  app.add_option("--format", format, "Output format: json, csv or text");
  app.add_option("--output", output, "Write output to this path instead of stdout");
  app.add_option("--config", config_file, "key = value configuration file");
  app.add_option("--seed", seed, "Seed for random sweep points");
  app.add_option("--threads", threads, "Sweep worker threads (0 = all cores)");
  app.add_flag("--reproducible", reproducible, "Omit timestamps and timings for byte-identical output");

  std::string id, kind, problem;
  std::vector<std::string> assignments;

  auto* list = app.add_subcommand("list", "List identity ids and parameter schemas");
  auto* verify = app.add_subcommand("verify", "Evaluate one identity: verify <id> key=value ...");
  verify->add_option("identity", id, "Identity id")->required();
  verify->add_option("params", assignments, "key=value parameters");
  auto* sweep = app.add_subcommand("sweep", "Evaluate an identity over a grid: a=lo:hi:count, a=v1,v2, a=rand:lo:hi:n");
  sweep->add_option("identity", id, "Identity id")->required();
  sweep->add_option("ranges", assignments, "key=range parameters");
  auto* trace = app.add_subcommand("trace", "Emit a factor-by-factor trace");
  trace->add_option("kind", kind, "dobinski, weierstrass or telescoping")->required();
  trace->add_option("params", assignments, "key=value parameters");
  trace->footer(kTraceHelp);
  auto* funceq = app.add_subcommand("funceq", "Solve f(a) = g(a) + x f(a/p) for a named or custom problem");
  funceq->add_option("problem", problem, "geometric, square, reciprocal, inverse_square, exp_decay, duplication, rs2 or custom")
      ->required();
  funceq->add_option("params", assignments, "a=, optional N=; custom also takes g= x= p= boundary=");
  auto* suite = app.add_subcommand("suite", "Run every acceptance criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitBadParameters;
  }

  RunConfig config;
  bool format_given = false;
  try {
    if (!config_file.empty()) config.load_file(config_file);
    config.load_environment();
    format_given = std::getenv("SINCPROD_FORMAT") != nullptr;
    if (digits) config.set("digits", std::to_string(digits));
    if (!tol.empty()) config.set("tol", tol);
    if (!rel_tol.empty()) config.set("rel_tol", rel_tol);
    if (max_terms) config.set("max_terms", std::to_string(max_terms));
    if (!format.empty()) {
      config.set("format", format);
      format_given = true;
    }
    if (!output.empty()) config.set("output", output);
    if (seed >= 0) config.set("seed", std::to_string(seed));
    if (threads >= 0) config.set("threads", std::to_string(threads));
    if (reproducible) config.reproducible = true;
    if (!config_file.empty() && !format_given) {
      RunConfig probe;
      probe.load_file(config_file);
      format_given = probe.format != RunConfig{}.format;
    }
  } catch (const sincprod::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadParameters;
  }
  if (*suite && !format_given) config.format = Format::text;

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!config.output.empty()) {
    file.open(config.output);
    if (!file) {
      std::cerr << "error: cannot write '" << config.output << "'\n";
      return kExitBadParameters;
    }
    out = &file;
  }

  try {
    if (*list) {
      write_catalog(*out);
      return kExitPass;
    }
    if (*suite) return run_suite_command(config, *out, std::cerr);
    const sincprod::ParamMap params = parse_assignments(assignments);
    if (*verify) return run_verify(id, params, config, *out, std::cerr);
    if (*sweep) return run_sweep(id, params, config, *out, std::cerr);
    if (*trace) return run_trace(kind, params, config, *out, std::cerr);
    if (*funceq) return run_funceq(problem, params, config, *out, std::cerr);
  } catch (const sincprod::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadParameters;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
