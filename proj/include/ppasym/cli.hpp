#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ppasym::cli {

enum class Command { kExpand, kAsym, kCompare, kOracle, kValidate };
enum class Kind { kSkew, kCylindric, kPpWidth, kProgressions, kPartitions };
enum class Format { kCsv, kJson };

/// Exit codes: success, failed validation, bad usage or input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::kExpand;
  std::optional<Kind> kind;
  std::optional<std::string> profile;
  std::optional<std::uint64_t> width;
  std::optional<std::string> factors;  // "x:y[:mult]" progressions, "gM[:mult]" geometric
  std::optional<std::uint64_t> limit;
  std::vector<std::uint64_t> checkpoints;  // empty: decade grid capped at limit
  std::optional<std::string> harness;
  std::optional<std::string> series_path;  // compare from saved artifacts
  std::optional<std::string> asym_path;
  std::optional<std::string> out_path;
  Format format = Format::kCsv;
  bool format_given = false;
};

/// Runs one pipeline. Artifacts go to config.out_path, or to `out` when unset;
/// diagnostics and the pretty formula go to `err` (or `out` when a file was written).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ppasym::cli
