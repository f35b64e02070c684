#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>

#include "sincprod/errors.hpp"

namespace sincprod::cli {
namespace {

constexpr const char* kKeys[] = {"digits", "tol", "rel_tol", "max_terms", "guard_digits",
                                 "format", "seed", "reproducible", "output", "threads"};

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError("'" + key + "' expects an integer, got '" + value + "'");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  std::string v = value;
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off" || v.empty()) return false;
  throw ConfigError("'" + key + "' expects a boolean, got '" + value + "'");
}

std::string positive_decimal(const std::string& key, const std::string& value) {
  const Real r = Real::parse(value, kDefaultBits);
  if (!(r > 0L)) throw ConfigError("'" + key + "' must be positive, got '" + value + "'");
  return value;
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "text") return Format::text;
  throw ConfigError("unknown format '" + text + "' (json, csv or text)");
}

std::string to_string(Format format) {
  switch (format) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::text: return "text";
  }
  return "?";
}

void RunConfig::set(const std::string& raw_key, const std::string& raw_value) {
  std::string key = raw_key;
  std::replace(key.begin(), key.end(), '-', '_');
  const std::string value = trim(raw_value);
  if (key == "digits") {
    digits = parse_number<int>(key, value);
  } else if (key == "tol" || key == "tail_tolerance") {
    tail_tolerance = positive_decimal(key, value);
  } else if (key == "rel_tol" || key == "rel_tolerance") {
    rel_tolerance = positive_decimal(key, value);
  } else if (key == "max_terms") {
    max_terms = parse_number<int>(key, value);
  } else if (key == "guard_digits") {
    guard_digits = parse_number<int>(key, value);
  } else if (key == "format") {
    format = parse_format(value);
  } else if (key == "seed") {
    seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "reproducible") {
    reproducible = parse_bool(key, value);
  } else if (key == "output") {
    output = value;
  } else if (key == "threads") {
    threads = parse_number<int>(key, value);
  } else {
    throw ConfigError("unknown configuration key '" + raw_key + "'");
  }
}

void RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(number) + ": expected 'key = value'");
    }
    set(trim(t.substr(0, eq)), t.substr(eq + 1));
  }
}

void RunConfig::load_environment() {
  for (const char* key : kKeys) {
    std::string name = "SINCPROD_";
    for (const char* c = key; *c; ++c) name += static_cast<char>(std::toupper(static_cast<unsigned char>(*c)));
    if (const char* v = std::getenv(name.c_str())) set(key, v);
  }
}

PrecisionContext RunConfig::context() const {
  if (digits < 10 || digits > 100000) throw ConfigError("digits must be in [10, 100000]");
  if (threads < 0) throw ConfigError("threads must be >= 0");
  PrecisionContext ctx = PrecisionContext::with_digits(digits);
  ctx.max_terms = max_terms;
  ctx.guard_digits = guard_digits;
  if (tail_tolerance) ctx.tail_tolerance = Real::parse(*tail_tolerance, kDefaultBits);
  if (rel_tolerance) ctx.rel_tolerance = Real::parse(*rel_tolerance, kDefaultBits);
  ctx.validate();
  return ctx;
}

std::map<std::string, std::string> RunConfig::describe() const {
  const PrecisionContext ctx = context();
  return {{"digits", std::to_string(digits)},
          {"tail_tolerance", ctx.tail_tolerance.to_string(3)},
          {"rel_tolerance", ctx.rel_tolerance.to_string(3)},
          {"max_terms", std::to_string(max_terms)},
          {"guard_digits", std::to_string(guard_digits)},
          {"seed", std::to_string(seed)}};
}

}  // namespace sincprod::cli
