#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "config.hpp"
#include "sincprod/report.hpp"

namespace sincprod::cli {

using nlohmann::ordered_json;

std::string format_value(const Value& value, int digits);
ordered_json value_json(const Value& value, int digits);
ordered_json report_json(const VerificationReport& report, int digits);

// Envelope shared by every JSON artifact: schema, command, config and,
// unless reproducible, a UTC timestamp.
ordered_json envelope(const std::string& command, const RunConfig& config);

// Minimal RFC 4180 quoting.
std::string csv_field(const std::string& text);
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);
// "# sincprod.report/1 <command>" line that opens every CSV artifact.
void write_csv_preamble(std::ostream& out, const std::string& command, const RunConfig& config);

// Report columns after the parameter columns.
std::vector<std::string> report_csv_header();
std::vector<std::string> report_csv_fields(const VerificationReport& report, int digits);

void write_report_text(std::ostream& out, const VerificationReport& report, int digits);

}  // namespace sincprod::cli
