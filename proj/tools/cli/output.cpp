#include "output.hpp"

#include <chrono>
#include <ctime>

namespace sincprod::cli {
namespace {

constexpr int kErrorDigits = 6;

std::string join_pairs(const KeyValues& kv) {
  std::string out;
  for (const auto& [k, v] : kv) out += (out.empty() ? "" : ";") + k + "=" + v;
  return out;
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string format_value(const Value& value, int digits) {
  if (const Real* r = std::get_if<Real>(&value)) return r->to_string(digits);
  const Complex& z = std::get<Complex>(value);
  std::string im = z.im.to_string(digits);
  if (im.front() == '-') return z.re.to_string(digits) + " - " + im.substr(1) + "i";
  return z.re.to_string(digits) + " + " + im + "i";
}

ordered_json value_json(const Value& value, int digits) {
  if (const Real* r = std::get_if<Real>(&value)) return r->to_string(digits);
  const Complex& z = std::get<Complex>(value);
  return ordered_json{{"re", z.re.to_string(digits)}, {"im", z.im.to_string(digits)}};
}

ordered_json report_json(const VerificationReport& report, int digits) {
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : report.parameters) params[k] = v;
  ordered_json extras = ordered_json::object();
  for (const auto& [k, v] : report.extras) extras[k] = v;
  ordered_json j;
  j["identity"] = report.identity_id;
  j["parameters"] = params;
  j["verdict"] = std::string(to_string(report.verdict));
  j["lhs"] = value_json(report.lhs, digits);
  j["rhs"] = value_json(report.rhs, digits);
  j["abs_error"] = report.abs_error.to_string(kErrorDigits);
  j["rel_error"] = report.rel_error.to_string(kErrorDigits);
  j["threshold"] = report.threshold.to_string(kErrorDigits);
  j["terms_used"] = report.terms_used;
  j["tail_bound"] = report.tail_bound.to_string(kErrorDigits);
  j["extras"] = extras;
  j["notes"] = report.notes;
  return j;
}

ordered_json envelope(const std::string& command, const RunConfig& config) {
  ordered_json j;
  j["schema"] = kSchema;
  j["command"] = command;
  ordered_json cfg = ordered_json::object();
  for (const auto& [k, v] : config.describe()) cfg[k] = v;
  j["config"] = cfg;
  if (!config.reproducible) j["generated_at"] = utc_now();
  return j;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
  out << "\n";
}

void write_csv_preamble(std::ostream& out, const std::string& command, const RunConfig& config) {
  out << "# " << kSchema << " " << command;
  for (const auto& [k, v] : config.describe()) out << " " << k << "=" << v;
  if (!config.reproducible) out << " generated_at=" << utc_now();
  out << "\n";
}

std::vector<std::string> report_csv_header() {
  return {"identity", "verdict", "lhs", "rhs", "abs_error", "rel_error", "threshold", "terms_used", "tail_bound",
          "extras"};
}

std::vector<std::string> report_csv_fields(const VerificationReport& report, int digits) {
  return {report.identity_id,
          std::string(to_string(report.verdict)),
          format_value(report.lhs, digits),
          format_value(report.rhs, digits),
          report.abs_error.to_string(kErrorDigits),
          report.rel_error.to_string(kErrorDigits),
          report.threshold.to_string(kErrorDigits),
          std::to_string(report.terms_used),
          report.tail_bound.to_string(kErrorDigits),
          join_pairs(report.extras)};
}

void write_report_text(std::ostream& out, const VerificationReport& report, int digits) {
  out << report.identity_id << " [" << join_pairs(report.parameters) << "]: " << to_string(report.verdict) << "\n"
      << "  lhs        " << format_value(report.lhs, digits) << "\n"
      << "  rhs        " << format_value(report.rhs, digits) << "\n"
      << "  abs_error  " << report.abs_error.to_string(kErrorDigits) << "  (threshold "
      << report.threshold.to_string(kErrorDigits) << ")\n"
      << "  terms      " << report.terms_used << "  tail " << report.tail_bound.to_string(kErrorDigits) << "\n";
  for (const auto& [k, v] : report.extras) out << "  " << k << " = " << v << "\n";
  for (const auto& n : report.notes) out << "  note: " << n << "\n";
}

}  // namespace sincprod::cli
