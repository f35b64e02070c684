#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <optional>
#include <random>
#include <thread>

#include "output.hpp"
#include "sincprod/anomalies.hpp"
#include "sincprod/elementary.hpp"
#include "sincprod/errors.hpp"
#include "sincprod/funceq.hpp"
#include "sincprod/products.hpp"

namespace sincprod::cli {
namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

long parse_count(const std::string& text) {
  try {
    std::size_t used = 0;
    const long n = std::stol(text, &used);
    if (used == text.size() && n >= 0) return n;
  } catch (const std::exception&) {
  }
  throw DomainError("grid count must be a non-negative integer, got '" + text + "'");
}

// Exit code for an exception escaping an evaluation, with a message on err.
int report_exception(const std::exception& e, std::ostream& err) {
  if (const auto* ep = dynamic_cast<const ExceptionalPoint*>(&e)) {
    err << "error: " << ep->what() << "\n";
    if (!ep->redirect().empty()) err << "hint: use " << ep->redirect() << "\n";
    return kExitBadParameters;
  }
  if (dynamic_cast<const DomainError*>(&e) || dynamic_cast<const ConfigError*>(&e) ||
      dynamic_cast<const EvaluationError*>(&e)) {
    err << "error: " << e.what() << "\n";
    return kExitBadParameters;
  }
  err << "internal error: " << e.what() << "\n";
  return kExitInternal;
}

std::string real_text(const Real& x, int digits) { return x.is_nan() ? "nan" : x.to_string(digits); }

}  // namespace

int exit_code_for(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass: return kExitPass;
    case Verdict::fail: return kExitFail;
    case Verdict::inconclusive: return kExitInconclusive;
  }
  return kExitInternal;
}

ParamMap parse_assignments(const std::vector<std::string>& tokens) {
  ParamMap out;
  for (const std::string& t : tokens) {
    const auto eq = t.find('=');
    if (eq == std::string::npos || eq == 0) throw DomainError("expected key=value, got '" + t + "'");
    out[t.substr(0, eq)] = t.substr(eq + 1);
  }
  return out;
}

std::vector<std::string> expand_axis(const std::string& spec, std::uint64_t seed) {
  if (spec.empty()) return {};
  const std::vector<std::string> parts = split(spec, ':');
  if (parts.size() == 1) {
    std::vector<std::string> out;
    for (const std::string& item : split(spec, ',')) {
      if (item.empty()) throw DomainError("empty entry in list '" + spec + "'");
      out.push_back(item);
    }
    return out;
  }
  if (parts.size() == 3) {
    const ExactArgument lo = ExactArgument::parse(parts[0]);
    const ExactArgument hi = ExactArgument::parse(parts[1]);
    const long count = parse_count(parts[2]);
    std::vector<std::string> out;
    for (long i = 0; i < count; ++i) {
      const ExactArgument v = count == 1 ? lo : lo + (hi - lo).scaled(mpq_class(i, count - 1));
      out.push_back(v.to_string());
    }
    return out;
  }
  if (parts.size() == 4 && parts[0] == "rand") {
    const mpq_class lo = parse_rational(parts[1]);
    const mpq_class hi = parse_rational(parts[2]);
    const long count = parse_count(parts[3]);
    if (!(lo < hi)) throw DomainError("random range needs lo < hi");
    // Draws on a 10^-6 lattice strictly inside (lo, hi); zero is skipped.
    const mpz_class scale = 1000000;
    mpz_class first = mpz_class(lo * scale);
    if (mpq_class(first, scale) <= lo) first += 1;
    mpq_class hi_scaled = hi * scale;
    mpz_class last = hi_scaled.get_num() / hi_scaled.get_den();
    if (mpq_class(last, scale) >= hi) last -= 1;
    if (last < first) throw DomainError("random range too narrow");
    std::mt19937_64 rng(seed);
    const mpz_class span = last - first + 1;
    if (!span.fits_ulong_p()) throw DomainError("random range too wide");
    std::uniform_int_distribution<unsigned long> pick(0, span.get_ui() - 1);
    std::vector<std::string> out;
    while (static_cast<long>(out.size()) < count) {
      const mpq_class v(first + mpz_class(pick(rng)), scale);
      if (sgn(v) == 0) continue;
      mpq_class c = v;
      c.canonicalize();
      out.push_back(ExactArgument::rational(c).to_string());
    }
    return out;
  }
  throw DomainError("cannot parse grid '" + spec + "' (lo:hi:count, rand:lo:hi:count or a,b,c)");
}

Grid build_grid(const IdentitySpec& spec, const ParamMap& ranges, std::uint64_t seed) {
  Grid grid;
  std::vector<std::vector<std::string>> axes;
  for (const auto& [name, range] : ranges) {
    bool is_list = false;
    for (const ParamSpec& p : spec.params) is_list |= p.name == name && p.kind == ParamKind::list;
    grid.names.push_back(name);
    axes.push_back(is_list ? std::vector<std::string>{range} : expand_axis(range, seed + axes.size()));
  }
  std::size_t total = 1;
  for (const auto& axis : axes) total *= axis.size();
  if (total == 0) return grid;
  for (std::size_t index = 0; index < total; ++index) {
    ParamMap point;
    std::size_t rest = index;
    for (std::size_t a = axes.size(); a-- > 0;) {
      point[grid.names[a]] = axes[a][rest % axes[a].size()];
      rest /= axes[a].size();
    }
    grid.points.push_back(std::move(point));
  }
  return grid;
}

int run_verify(const std::string& id, const ParamMap& params, const RunConfig& config, std::ostream& out,
               std::ostream& err) {
  const IdentitySpec* spec = find_identity(id);
  if (!spec) {
    err << "error: unknown identity '" << id << "' (see `sincprod list`)\n";
    return kExitUnknownIdentity;
  }
  VerificationReport report;
  try {
    const PrecisionContext ctx = config.context();
    report = evaluate_identity(*spec, params, ctx);
  } catch (const std::exception& e) {
    return report_exception(e, err);
  }
  switch (config.format) {
    case Format::json: {
      ordered_json j = envelope("verify", config);
      j["report"] = report_json(report, config.digits);
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv: {
      write_csv_preamble(out, "verify", config);
      std::vector<std::string> header{"parameters"};
      std::vector<std::string> row;
      std::string p;
      for (const auto& [k, v] : report.parameters) p += (p.empty() ? "" : ";") + k + "=" + v;
      row.push_back(p);
      for (auto& h : report_csv_header()) header.push_back(h);
      for (auto& f : report_csv_fields(report, config.digits)) row.push_back(f);
      write_csv_row(out, header);
      write_csv_row(out, row);
      break;
    }
    case Format::text: write_report_text(out, report, config.digits); break;
  }
  return exit_code_for(report.verdict);
}

namespace {

struct SweepRow {
  ParamMap params;
  std::optional<VerificationReport> report;
  std::string error;
};

}  // namespace

int run_sweep(const std::string& id, const ParamMap& ranges, const RunConfig& config, std::ostream& out,
              std::ostream& err) {
  const IdentitySpec* spec = find_identity(id);
  if (!spec) {
    err << "error: unknown identity '" << id << "'\n";
    return kExitUnknownIdentity;
  }
  Grid grid;
  PrecisionContext ctx;
  try {
    ctx = config.context();
    grid = build_grid(*spec, ranges, config.seed);
  } catch (const std::exception& e) {
    return report_exception(e, err);
  }
  if (grid.points.empty()) {
    err << "error: empty sweep grid\n";
    return kExitBadParameters;
  }

  // Points are claimed in any order but stored by grid index, so output order
  // never depends on scheduling.
  std::vector<SweepRow> rows(grid.points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      rows[i].params = grid.points[i];
      try {
        rows[i].report = evaluate_identity(*spec, grid.points[i], ctx);
      } catch (const std::exception& e) {
        rows[i].error = e.what();
      }
    }
  };
  unsigned threads = config.threads > 0 ? static_cast<unsigned>(config.threads) : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(rows.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  bool any_fail = false, any_error = false, any_inconclusive = false;
  for (const SweepRow& r : rows) {
    if (!r.report) {
      any_error = true;
    } else {
      any_fail |= r.report->verdict == Verdict::fail;
      any_inconclusive |= r.report->verdict == Verdict::inconclusive;
    }
  }

  if (config.format == Format::json) {
    ordered_json j = envelope("sweep", config);
    j["identity"] = id;
    ordered_json list = ordered_json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      ordered_json row;
      row["index"] = i;
      ordered_json p = ordered_json::object();
      for (const auto& [k, v] : rows[i].params) p[k] = v;
      row["grid"] = p;
      if (rows[i].report) {
        row["report"] = report_json(*rows[i].report, config.digits);
      } else {
        row["error"] = rows[i].error;
      }
      list.push_back(row);
    }
    j["rows"] = list;
    out << j.dump(2) << "\n";
  } else {
    write_csv_preamble(out, "sweep " + id, config);
    std::vector<std::string> header{"index"};
    for (const auto& n : grid.names) header.push_back(n);
    for (auto& h : report_csv_header()) header.push_back(h);
    header.push_back("error");
    write_csv_row(out, header);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::vector<std::string> f{std::to_string(i)};
      for (const auto& n : grid.names) f.push_back(rows[i].params.at(n));
      if (rows[i].report) {
        for (auto& v : report_csv_fields(*rows[i].report, config.digits)) f.push_back(v);
        f.push_back("");
      } else {
        f.push_back(id);
        f.push_back("error");
        for (int k = 0; k < 8; ++k) f.push_back("");
        f.push_back(rows[i].error);
      }
      write_csv_row(out, f);
    }
  }
  if (any_fail) return kExitFail;
  if (any_error) return kExitBadParameters;
  if (any_inconclusive) return kExitInconclusive;
  return kExitPass;
}

namespace {

long int_param(const ParamMap& p, const std::string& key, std::optional<long> fallback = std::nullopt) {
  auto it = p.find(key);
  if (it == p.end()) {
    if (fallback) return *fallback;
    throw DomainError("missing parameter '" + key + "'");
  }
  try {
    std::size_t used = 0;
    const long v = std::stol(it->second, &used);
    if (used == it->second.size()) return v;
  } catch (const std::exception&) {
  }
  throw DomainError("parameter '" + key + "' must be an integer");
}

const std::string& text_param(const ParamMap& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw DomainError("missing parameter '" + key + "'");
  return it->second;
}

void reject_unknown(const ParamMap& p, std::initializer_list<const char*> allowed) {
  for (const auto& [k, v] : p) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; })) {
      throw DomainError("unknown parameter '" + k + "'");
    }
  }
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  KeyValues summary;
};

Table dobinski_table(const ParamMap& p, const PrecisionContext& ctx, int digits) {
  reject_unknown(p, {"a", "J"});
  const ExactArgument a = ExactArgument::parse(text_param(p, "a"));
  const DobinskiTrace trace = dobinski_evaluate(a, int_param(p, "J", 20), ctx);
  Table t;
  t.columns = {"j", "tan", "complex_branch", "factor_re", "factor_im", "partial_re", "partial_im", "target",
               "target_deviation", "closure_re", "closure_im", "closure_modulus", "closure_deviation", "phase",
               "branch_closure_deviation", "agnew_walker_re", "agnew_walker_im"};
  for (const DobinskiRow& r : trace.rows) {
    t.rows.push_back({std::to_string(r.j), r.tan_value.to_string(digits), r.complex_branch ? "1" : "0",
                      r.factor.re.to_string(digits), r.factor.im.to_string(digits), r.partial.re.to_string(digits),
                      r.partial.im.to_string(digits), trace.target.to_string(digits),
                      r.target_deviation.to_string(6), r.closure.re.to_string(digits),
                      r.closure.im.to_string(digits), abs(r.closure).to_string(digits),
                      r.closure_deviation.to_string(6), r.phase.to_string(digits),
                      r.branch_closure_deviation.to_string(6), r.agnew_walker.re.to_string(digits),
                      r.agnew_walker.im.to_string(digits)});
  }
  t.summary = {{"a", a.to_string()},
               {"target", trace.target.to_string(digits)},
               {"max_branch_closure_deviation", trace.max_branch_closure_deviation.to_string(6)}};
  return t;
}

Table weierstrass_table(const ParamMap& p, const PrecisionContext& ctx, int digits) {
  reject_unknown(p, {"a", "kmax", "allow_expensive", "window"});
  const ExactArgument a = ExactArgument::parse(text_param(p, "a"));
  const long window = int_param(p, "window", 40);
  const LimitTrajectory traj =
      weierstrass_trajectory(a, int_param(p, "kmax", 60), ctx, int_param(p, "allow_expensive", 0) != 0);
  Table t;
  t.columns = {"k", "lhs", "rhs", "identity_deviation", "br114a", "two_pow_minus_k", "br114a_deviation",
               "cauchy_violation"};
  std::vector<bool> flagged(traj.rows.size() + 2, false);
  for (const CauchyViolation& v : traj.violations) flagged[static_cast<std::size_t>(v.k1)] = true;
  for (const TrajectoryRow& r : traj.rows) {
    t.rows.push_back({std::to_string(r.k), r.lhs.to_string(digits), r.rhs.to_string(digits),
                      r.identity_deviation.to_string(6), real_text(r.br114a, digits),
                      Real::power_of_two(-r.k, 64).to_string(digits), real_text(r.br114a_deviation, 6),
                      flagged[static_cast<std::size_t>(r.k)] ? "1" : "0"});
  }
  std::string missing;
  for (long s : windows_without_violation(traj, window)) missing += (missing.empty() ? "" : ",") + std::to_string(s);
  t.summary = {{"a", a.to_string()},
               {"max_identity_deviation", traj.max_identity_deviation.to_string(6)},
               {"max_br114a_deviation", traj.max_br114a_deviation.to_string(6)},
               {"br114a_decreasing", traj.br114a_decreasing ? "true" : "false"},
               {"cauchy_violations", std::to_string(traj.violations.size())},
               {"windows_without_violation", missing}};
  return t;
}

Table telescoping_table(const ParamMap& p, const PrecisionContext& ctx, int digits) {
  reject_unknown(p, {"N", "a", "J"});
  const ExactArgument a = ExactArgument::parse(text_param(p, "a"));
  const TelescopingTrace trace = telescoping_trace(int_param(p, "N", 1), a, int_param(p, "J", 10), ctx);
  Table t;
  t.columns = {"j", "factor", "nplication_factor", "cumulative", "closed_form", "limit_ratio"};
  for (const TelescopingRow& r : trace.rows) {
    t.rows.push_back({std::to_string(r.j), r.factor.to_string(digits), r.nplication_factor.to_string(digits),
                      r.cumulative.to_string(digits), r.closed_form.to_string(digits),
                      r.limit_ratio.to_string(digits)});
  }
  t.summary = {{"N", std::to_string(trace.N)},
               {"a", a.to_string()},
               {"max_factor_deviation", trace.max_factor_deviation.to_string(6)},
               {"max_cumulative_deviation", trace.max_cumulative_deviation.to_string(6)}};
  return t;
}

void write_table(std::ostream& out, const std::string& command, const Table& t, const RunConfig& config) {
  if (config.format == Format::json) {
    ordered_json j = envelope(command, config);
    ordered_json summary = ordered_json::object();
    for (const auto& [k, v] : t.summary) summary[k] = v;
    j["summary"] = summary;
    j["columns"] = t.columns;
    ordered_json rows = ordered_json::array();
    for (const auto& r : t.rows) {
      ordered_json row;
      for (std::size_t i = 0; i < t.columns.size(); ++i) row[t.columns[i]] = r[i];
      rows.push_back(row);
    }
    j["rows"] = rows;
    out << j.dump(2) << "\n";
    return;
  }
  write_csv_preamble(out, command, config);
  for (const auto& [k, v] : t.summary) out << "# " << k << "=" << v << "\n";
  write_csv_row(out, t.columns);
  for (const auto& r : t.rows) write_csv_row(out, r);
}

}  // namespace

int run_trace(const std::string& kind, const ParamMap& params, const RunConfig& config, std::ostream& out,
              std::ostream& err) {
  try {
    const PrecisionContext ctx = config.context();
    Table t;
    if (kind == "dobinski") {
      t = dobinski_table(params, ctx, config.digits);
    } else if (kind == "weierstrass") {
      t = weierstrass_table(params, ctx, config.digits);
    } else if (kind == "telescoping") {
      t = telescoping_table(params, ctx, config.digits);
    } else {
      err << "error: unknown trace kind '" << kind << "' (dobinski, weierstrass, telescoping)\n";
      return kExitUnknownIdentity;
    }
    write_table(out, "trace " + kind, t, config);
    return kExitPass;
  } catch (const std::exception& e) {
    return report_exception(e, err);
  }
}

namespace {

Boundary parse_boundary(const std::string& text) {
  for (Boundary b : {Boundary::f0_finite, Boundary::f0_zero, Boundary::f_inf_finite}) {
    if (to_string(b) == text) return b;
  }
  throw DomainError("unknown boundary '" + text + "' (f0_finite, f0_zero, f_inf_finite)");
}

FunceqProblem custom_problem(const ParamMap& p, const PrecisionContext& ctx) {
  const ElementaryFn fn = parse_elementary_fn(text_param(p, "g"));
  FunceqProblem prob;
  prob.label = "custom:" + std::string(to_string(fn));
  prob.g = [fn, ctx](const Real& y) { return elementary(fn, y, ctx); };
  prob.x = realize(ExactArgument::parse(text_param(p, "x")), ctx.working_bits());
  prob.p = realize(ExactArgument::parse(text_param(p, "p")), ctx.working_bits());
  auto it = p.find("boundary");
  prob.boundary = it == p.end() ? (prob.x > 1L ? Boundary::f_inf_finite
                                               : (prob.x == 1L ? Boundary::f0_zero : Boundary::f0_finite))
                                : parse_boundary(it->second);
  prob.validate();
  return prob;
}

}  // namespace

int run_funceq(const std::string& name, const ParamMap& params, const RunConfig& config, std::ostream& out,
               std::ostream& err) {
  try {
    const PrecisionContext ctx = config.context();
    const bool custom = name == "custom";
    if (custom) {
      reject_unknown(params, {"g", "x", "p", "boundary", "a", "N"});
    } else {
      reject_unknown(params, {"a", "N"});
    }
    const FunceqProblem prob = custom ? custom_problem(params, ctx) : named_problem(name);
    const std::string a_text = text_param(params, "a");
    const Real a = realize(ExactArgument::parse(a_text), ctx.working_bits());
    const int d = config.digits;

    KeyValues summary{{"problem", prob.label},
                      {"boundary", std::string(to_string(prob.boundary))},
                      {"x", prob.x.to_string(d)},
                      {"p", prob.p.to_string(d)},
                      {"a", a_text}};
    Verdict verdict = Verdict::pass;
    std::optional<PartialEvaluation> solution;
    try {
      solution = prob.boundary == Boundary::f_inf_finite ? solve_expanding(prob, a, ctx) : solve_series(prob, a, ctx);
    } catch (const NoConvergence& e) {
      solution = e.partial();
      verdict = Verdict::inconclusive;
    }
    summary.emplace_back("solution", solution->value.to_string(d));
    summary.emplace_back("terms_used", std::to_string(solution->terms_used));
    summary.emplace_back("tail_bound", solution->tail_bound.to_string(6));
    summary.emplace_back("converged", solution->converged ? "true" : "false");

    std::optional<VerificationReport> report;
    if (!custom && has_closed_form(name)) {
      const Real rhs = closed_form(name, a, ctx);
      summary.emplace_back("closed_form", rhs.to_string(d));
      if (verdict != Verdict::inconclusive) {
        report = make_report("funceq", {{"problem", name}, {"a", a_text}}, solution->value, rhs, ctx,
                             solution->terms_used, solution->tail_bound);
        verdict = report->verdict;
        summary.emplace_back("abs_error", report->abs_error.to_string(6));
      }
    }
    if (params.count("N")) {
      const long n = int_param(params, "N");
      if (prob.boundary == Boundary::f_inf_finite) throw DomainError("N= unrolling applies to contracting problems");
      const FiniteExpansion fe = expand_finite(prob, a, n, ctx);
      summary.emplace_back("N", std::to_string(n));
      summary.emplace_back("partial_sum", fe.partial_sum.to_string(d));
      summary.emplace_back("remainder_weight", fe.remainder_weight.to_string(d));
      summary.emplace_back("remainder_argument", fe.remainder_argument.to_string(d));
      if (verdict != Verdict::inconclusive) {
        const Real tail = solve_series(prob, fe.remainder_argument, ctx).value;
        const Real rebuilt = fe.partial_sum + fe.remainder_weight * tail;
        summary.emplace_back("unrolled_deviation", abs(rebuilt - solution->value).to_string(6));
      }
    }
    summary.emplace_back("verdict", std::string(to_string(verdict)));

    if (config.format == Format::json) {
      ordered_json j = envelope("funceq", config);
      ordered_json s = ordered_json::object();
      for (const auto& [k, v] : summary) s[k] = v;
      j["result"] = s;
      out << j.dump(2) << "\n";
    } else if (config.format == Format::text) {
      for (const auto& [k, v] : summary) out << std::left << std::setw(20) << k << v << "\n";
    } else {
      write_csv_preamble(out, "funceq", config);
      std::vector<std::string> header, row;
      for (const auto& [k, v] : summary) {
        header.push_back(k);
        row.push_back(v);
      }
      write_csv_row(out, header);
      write_csv_row(out, row);
    }
    return exit_code_for(verdict);
  } catch (const std::exception& e) {
    return report_exception(e, err);
  }
}

void write_catalog(std::ostream& out) {
  for (const IdentitySpec& spec : identity_catalog()) {
    out << spec.id;
    for (const ParamSpec& p : spec.params) {
      out << " " << p.name << "=<" << to_string(p.kind);
      if (!p.default_value.empty()) out << ", default " << p.default_value;
      out << ">";
    }
    out << "\n    " << spec.description << "\n";
  }
}

}  // namespace sincprod::cli
