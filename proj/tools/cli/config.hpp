#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "sincprod/precision.hpp"

namespace sincprod::cli {

inline constexpr const char* kSchema = "sincprod.report/1";

enum class Format { json, csv, text };

Format parse_format(const std::string& text);
std::string to_string(Format format);

// Run settings. Sources apply in order: defaults, --config file, SINCPROD_*
// environment variables, command-line flags.
struct RunConfig {
  int digits = 50;
  // Unset means 10^-(digits-10).
  std::optional<std::string> tail_tolerance;
  std::optional<std::string> rel_tolerance;
  int max_terms = 256;
  int guard_digits = 10;
  Format format = Format::json;
  std::uint64_t seed = 20240611;
  bool reproducible = false;
  std::string output;  // empty = stdout
  // Worker threads for sweeps; 0 = hardware concurrency.
  int threads = 0;

  // Throws ConfigError on unknown keys or bad values.
  void set(const std::string& key, const std::string& value);
  void load_file(const std::string& path);
  // Reads SINCPROD_DIGITS, SINCPROD_TOL, ... for every key accepted by set().
  void load_environment();

  PrecisionContext context() const;
  std::map<std::string, std::string> describe() const;
};

}  // namespace sincprod::cli
