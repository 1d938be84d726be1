#include "ppasym/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ppasym/asymptotics.hpp"
#include "ppasym/error.hpp"
#include "ppasym/oracle.hpp"
#include "ppasym/profile.hpp"
#include "ppasym/report_io.hpp"
#include "ppasym/series.hpp"
#include "ppasym/validation.hpp"

namespace ppasym::cli {
namespace {

// Bad flag combinations, reported with exit code 2 before any computation.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::map<std::string, Kind> kKinds = {{"skew", Kind::kSkew},
                                            {"cp", Kind::kCylindric},
                                            {"pp-width", Kind::kPpWidth},
                                            {"progressions", Kind::kProgressions},
                                            {"partitions", Kind::kPartitions}};

std::uint64_t parse_count(const std::string& token, const std::string& what) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError(what + " '" + token + "' is not a nonnegative integer");
  }
  return std::stoull(token);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

FactorSet parse_factor_list(const std::string& text) {
  FactorSet factors;
  for (const auto& token : split(text, ',')) {
    if (!token.empty() && token.front() == 'g') {
      const auto fields = split(token.substr(1), ':');
      if (fields.empty() || fields.size() > 2) throw UsageError("bad geometric factor '" + token + "'");
      factors.add_geometric(parse_count(fields[0], "modulus"),
                            fields.size() == 2 ? parse_count(fields[1], "multiplicity") : 1);
      continue;
    }
    const auto fields = split(token, ':');
    if (fields.size() < 2 || fields.size() > 3) {
      throw UsageError("bad progression factor '" + token + "' (expected x:y or x:y:mult)");
    }
    factors.add_progression(parse_count(fields[0], "step"), parse_count(fields[1], "offset"),
                            fields.size() == 3 ? parse_count(fields[2], "multiplicity") : 1);
  }
  if (factors.empty()) throw UsageError("--factors lists no factors");
  return factors;
}

Kind require_kind(const RunConfig& config) {
  if (!config.kind) throw UsageError("--kind is required");
  return *config.kind;
}

std::uint64_t require_limit(const RunConfig& config) {
  if (!config.limit) throw UsageError("--limit is required");
  return *config.limit;
}

Profile require_profile(const RunConfig& config) {
  if (!config.profile) throw UsageError("--profile is required for this kind");
  return parse_profile(*config.profile);
}

std::uint64_t require_width(const RunConfig& config) {
  if (!config.width) throw UsageError("--width is required for kind pp-width");
  return *config.width;
}

FactorSet pp_width_factors(std::uint64_t m) {
  FactorSet factors;
  for (std::uint64_t i = 1; i <= m; ++i) factors.add_progression(1, i);
  return factors;
}

FactorSet factors_for(const RunConfig& config) {
  switch (require_kind(config)) {
    case Kind::kSkew:
      return skew_decomposed_factors(SkewProfile(require_profile(config)));
    case Kind::kCylindric:
      return cp_factor_set(require_profile(config));
    case Kind::kPpWidth:
      return pp_width_factors(require_width(config));
    case Kind::kProgressions:
      if (!config.factors) throw UsageError("--factors is required for kind progressions");
      return parse_factor_list(*config.factors);
    case Kind::kPartitions:
      return pp_width_factors(1);
  }
  throw UsageError("unhandled kind");
}

PolyExpParams asym_for(const RunConfig& config) {
  switch (require_kind(config)) {
    case Kind::kSkew:
      return skew_pp_asym(SkewProfile(require_profile(config)));
    case Kind::kCylindric:
      return cp_asym(require_profile(config));
    case Kind::kPpWidth:
      return pp_width_asym(require_width(config));
    case Kind::kProgressions:
      return factor_set_asym(factors_for(config));
    case Kind::kPartitions:
      return pp_width_asym(1);
  }
  throw UsageError("unhandled kind");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool looks_like_json(const std::string& path, const std::string& text) {
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) return true;
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '[';
}

// Returns the stream that should receive human-readable notes.
std::ostream& emit(const RunConfig& config, const std::string& payload, std::ostream& out,
                   std::ostream& err) {
  if (!config.out_path) {
    out << payload;
    return err;
  }
  std::ofstream file(*config.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot write '" + *config.out_path + "'");
  file << payload;
  return out;
}

int run_expand(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto factors = factors_for(config);
  const auto series = expand(factors, require_limit(config));
  emit(config, config.format == Format::kJson ? series_to_json(series) : series_to_csv(series), out, err);
  return kExitOk;
}

int run_asym(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.format_given && config.format != Format::kJson) {
    throw UsageError("asym writes JSON only");
  }
  const auto params = asym_for(config);
  emit(config, polyexp_to_json(params), out, err) << pretty(params) << "\n";
  return kExitOk;
}

int run_compare(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::optional<CoefficientSeries> series;
  PolyExpParams params;
  if (config.series_path || config.asym_path) {
    if (!config.series_path || !config.asym_path) {
      throw UsageError("compare from files needs both --series and --asym");
    }
    const auto text = read_file(*config.series_path);
    series = looks_like_json(*config.series_path, text) ? series_from_json(text) : series_from_csv(text);
    params = polyexp_from_json(read_file(*config.asym_path));
  } else {
    params = asym_for(config);
    series = expand(factors_for(config), require_limit(config));
  }
  const auto checkpoints =
      config.checkpoints.empty() ? decade_checkpoints(series->limit()) : config.checkpoints;
  if (checkpoints.empty()) throw UsageError("no checkpoints: the limit is below 100");
  const auto report = ratio_report(*series, params, checkpoints);
  auto& notes = emit(config, config.format == Format::kJson ? ratio_report_to_json(report)
                                                            : ratio_report_to_csv(report),
                     out, err);
  notes << "deviation |ratio-1| "
        << (report.deviation_decreasing(std::min<std::size_t>(3, report.rows.size()))
                ? "decreasing"
                : "not decreasing")
        << " over the last checkpoints\n";
  return kExitOk;
}

int run_oracle(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto limits = OracleLimits::from_env();
  const auto limit = require_limit(config);
  CoefficientSeries series = CoefficientSeries::one(0);
  switch (require_kind(config)) {
    case Kind::kSkew:
      series = count_skew_pp(SkewProfile(require_profile(config)), limit, limits);
      break;
    case Kind::kCylindric:
      series = count_cp(require_profile(config), limit, limits);
      break;
    case Kind::kPpWidth:
      series = count_pp_width_direct(require_width(config), limit, limits);
      break;
    case Kind::kPartitions:
      series = count_pp_width_direct(1, limit, limits);
      break;
    case Kind::kProgressions:
      throw UsageError("the oracle enumerates skew, cp, pp-width and partitions only");
  }
  emit(config, config.format == Format::kJson ? series_to_json(series) : series_to_csv(series), out, err);
  return kExitOk;
}

int run_validate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!config.harness) throw UsageError("--harness is required");
  const auto result = run_harness(*config.harness);
  auto& notes = emit(config, config.format == Format::kJson ? harness_to_json(result)
                                                            : harness_to_csv(result),
                     out, err);
  for (const auto& entry : result.cases) {
    notes << (entry.passed ? "PASS " : "FAIL ") << result.harness << " " << entry.name << "\n";
  }
  return result.passed() ? kExitOk : kExitValidationFailed;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::kExpand:
        return run_expand(config, out, err);
      case Command::kAsym:
        return run_asym(config, out, err);
      case Command::kCompare:
        return run_compare(config, out, err);
      case Command::kOracle:
        return run_oracle(config, out, err);
      case Command::kValidate:
        return run_validate(config, out, err);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts and asymptotics for skew plane partitions and cylindric partitions"};
  app.require_subcommand(1);

  RunConfig config;
  std::string kind;
  std::string format;
  std::string checkpoints;

  auto add_common = [&](CLI::App* sub, bool with_kind) {
    if (with_kind) {
      sub->add_option("--kind", kind, "skew | cp | pp-width | progressions | partitions")
          ->check(CLI::IsMember({"skew", "cp", "pp-width", "progressions", "partitions"}));
      sub->add_option("--profile", config.profile,
                      "Skew head or cylindric period, e.g. \"++-+\" or \"1,-1,-1\"");
      sub->add_option("--width", config.width, "Row bound m for kind pp-width");
      sub->add_option("--factors", config.factors, "Factor list: x:y[:mult] or gM[:mult], comma separated");
    }
    sub->add_option("--out", config.out_path, "Output path (default: stdout)");
    sub->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  };

  auto* expand_cmd = app.add_subcommand("expand", "Exact coefficient series");
  add_common(expand_cmd, true);
  expand_cmd->add_option("--limit", config.limit, "Truncation order N");

  auto* asym_cmd = app.add_subcommand("asym", "Leading asymptotic C n^alpha exp(beta n^p) as JSON");
  add_common(asym_cmd, true);

  auto* compare_cmd = app.add_subcommand("compare", "Exact-to-asymptotic ratio report");
  add_common(compare_cmd, true);
  compare_cmd->add_option("--limit", config.limit, "Truncation order N");
  compare_cmd->add_option("--checkpoints", checkpoints, "Comma separated indices (default 100,1000,... <= limit)");
  compare_cmd->add_option("--series", config.series_path, "Saved series (CSV or JSON) from expand");
  compare_cmd->add_option("--asym", config.asym_path, "Saved JSON from asym");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force counts by interlacing enumeration");
  add_common(oracle_cmd, true);
  oracle_cmd->add_option("--limit", config.limit, "Largest size counted");

  auto* validate_cmd = app.add_subcommand("validate", "Run a numeric validation harness");
  add_common(validate_cmd, false);
  validate_cmd->add_option("--harness", config.harness, "theorem1 | theorem3 | laplace | sum-integral")
      ->check(CLI::IsMember({"theorem1", "theorem3", "laplace", "sum-integral"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (expand_cmd->parsed()) config.command = Command::kExpand;
  if (asym_cmd->parsed()) config.command = Command::kAsym;
  if (compare_cmd->parsed()) config.command = Command::kCompare;
  if (oracle_cmd->parsed()) config.command = Command::kOracle;
  if (validate_cmd->parsed()) config.command = Command::kValidate;
  if (!kind.empty()) config.kind = kKinds.at(kind);
  if (!format.empty()) {
    config.format = format == "json" ? Format::kJson : Format::kCsv;
    config.format_given = true;
  }
  try {
    for (const auto& token : split(checkpoints, ',')) {
      if (!token.empty()) config.checkpoints.push_back(parse_count(token, "checkpoint"));
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return run(config, out, err);
}

}  // namespace ppasym::cli
