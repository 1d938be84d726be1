#include "ppasym/report_io.hpp"

#include <algorithm>
#include <sstream>

#include <fmt/format.h>
#include "json.hpp"

#include "ppasym/error.hpp"

namespace ppasym {
namespace {

constexpr std::string_view kModule = "io";

[[noreturn]] void fail(const std::string& message) { throw Error(kModule, message); }

BigInt parse_count(std::string_view digits, std::size_t line) {
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
    fail("line " + std::to_string(line) + ": count is not a decimal integer");
  }
  return BigInt(std::string(digits));
}

std::string json_string(const std::string& text) { return nlohmann::json(text).dump(); }

std::string ratio_rows_json(const RatioReport& report) {
  std::string out = "[";
  for (std::size_t k = 0; k < report.rows.size(); ++k) {
    const auto& row = report.rows[k];
    if (k > 0) out += ",";
    out += fmt::format(R"({{"n":{},"log_exact":{},"log_asym":{},"ratio":{}}})", row.n,
                       format_float(row.log_exact), format_float(row.log_asym),
                       format_float(row.ratio));
  }
  return out + "]";
}

}  // namespace

std::string format_float(double value) { return fmt::format("{:.17g}", value); }

std::string series_to_csv(const CoefficientSeries& series) {
  std::string out = "n,count\n";
  const auto coeffs = series.coeffs();
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    out += std::to_string(n);
    out += ',';
    out += coeffs[n].get_str();
    out += '\n';
  }
  return out;
}

std::string series_to_json(const CoefficientSeries& series) {
  std::string out = "[";
  const auto coeffs = series.coeffs();
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (n > 0) out += ',';
    out += '"';
    out += coeffs[n].get_str();
    out += '"';
  }
  return out + "]\n";
}

CoefficientSeries series_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "n,count") fail("series CSV must start with 'n,count'");
  std::vector<BigInt> coeffs;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) fail("line " + std::to_string(line_no) + ": missing comma");
    if (line.substr(0, comma) != std::to_string(coeffs.size())) {
      fail("line " + std::to_string(line_no) + ": expected index " + std::to_string(coeffs.size()));
    }
    coeffs.push_back(parse_count(std::string_view(line).substr(comma + 1), line_no));
  }
  return CoefficientSeries(std::move(coeffs));
}

CoefficientSeries series_from_json(std::string_view text) {
  const auto doc = nlohmann::json::parse(text, nullptr, false);
  if (!doc.is_array()) fail("series JSON must be an array of decimal strings");
  std::vector<BigInt> coeffs;
  for (std::size_t n = 0; n < doc.size(); ++n) {
    if (!doc[n].is_string()) fail("series JSON entry " + std::to_string(n) + " is not a string");
    coeffs.push_back(parse_count(doc[n].get<std::string>(), n + 1));
  }
  return CoefficientSeries(std::move(coeffs));
}

std::string polyexp_to_json(const PolyExpParams& params) {
  return fmt::format(R"({{"logC":{},"alpha":{},"beta":{},"p":{},"stride":{}}})",
                     format_float(params.log_c), format_float(params.alpha),
                     format_float(params.beta), format_float(params.p), params.stride) +
         "\n";
}

PolyExpParams polyexp_from_json(std::string_view text) {
  const auto doc = nlohmann::json::parse(text, nullptr, false);
  if (!doc.is_object()) fail("asymptotic JSON must be an object");
  PolyExpParams params;
  try {
    params.log_c = doc.at("logC").get<double>();
    params.alpha = doc.at("alpha").get<double>();
    params.beta = doc.at("beta").get<double>();
    params.p = doc.at("p").get<double>();
    params.stride = doc.contains("stride") ? doc.at("stride").get<std::uint64_t>() : 1;
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("asymptotic JSON: ") + e.what());
  }
  validate(params);
  return params;
}

std::string factor_set_to_json(const FactorSet& factors) {
  nlohmann::ordered_json doc;
  doc["geometric"] = nlohmann::ordered_json::array();
  for (const auto& g : factors.geometric()) {
    doc["geometric"].push_back({{"m", g.modulus}, {"mult", g.multiplicity}});
  }
  doc["progressions"] = nlohmann::ordered_json::array();
  for (const auto& p : factors.progressions()) {
    doc["progressions"].push_back({{"x", p.step}, {"y", p.offset}, {"mult", p.multiplicity}});
  }
  return doc.dump() + "\n";
}

FactorSet factor_set_from_json(std::string_view text) {
  const auto doc = nlohmann::json::parse(text, nullptr, false);
  if (!doc.is_object()) fail("factor set JSON must be an object");
  FactorSet factors;
  try {
    if (doc.contains("geometric")) {
      for (const auto& g : doc.at("geometric")) {
        factors.add_geometric(g.at("m").get<std::uint64_t>(), g.value("mult", std::uint64_t{1}));
      }
    }
    if (doc.contains("progressions")) {
      for (const auto& p : doc.at("progressions")) {
        factors.add_progression(p.at("x").get<std::uint64_t>(), p.at("y").get<std::uint64_t>(),
                                p.value("mult", std::uint64_t{1}));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("factor set JSON: ") + e.what());
  }
  return factors;
}

std::string ratio_report_to_csv(const RatioReport& report) {
  std::string out = "n,log_exact,log_asym,ratio\n";
  for (const auto& row : report.rows) {
    out += fmt::format("{},{},{},{}\n", row.n, format_float(row.log_exact),
                       format_float(row.log_asym), format_float(row.ratio));
  }
  return out;
}

std::string ratio_report_to_json(const RatioReport& report) { return ratio_rows_json(report) + "\n"; }

std::string harness_to_csv(const HarnessResult& result) {
  const bool bounds = !result.cases.empty() &&
                      std::any_of(result.cases.begin(), result.cases.end(),
                                  [](const HarnessCase& c) { return !c.bounds.empty(); });
  std::string out = bounds ? "case,n,integral,riemann_sum,slack,holds\n"
                           : "case,n,log_exact,log_asym,ratio\n";
  for (const auto& entry : result.cases) {
    for (const auto& row : entry.ratios.rows) {
      out += fmt::format("{},{},{},{},{}\n", entry.name, row.n, format_float(row.log_exact),
                         format_float(row.log_asym), format_float(row.ratio));
    }
    for (const auto& row : entry.bounds) {
      out += fmt::format("{},{},{},{},{},{}\n", entry.name, row.n, format_float(row.integral),
                         format_float(row.riemann_sum), format_float(row.slack), row.holds ? 1 : 0);
    }
  }
  return out;
}

std::string harness_to_json(const HarnessResult& result) {
  std::string out = fmt::format(R"({{"harness":{},"passed":{},"cases":[)", json_string(result.harness),
                                result.passed() ? "true" : "false");
  for (std::size_t k = 0; k < result.cases.size(); ++k) {
    const auto& entry = result.cases[k];
    if (k > 0) out += ",";
    out += fmt::format(R"({{"name":{},"passed":{})", json_string(entry.name),
                       entry.passed ? "true" : "false");
    if (!entry.ratios.rows.empty()) out += R"(,"rows":)" + ratio_rows_json(entry.ratios);
    if (!entry.bounds.empty()) {
      out += R"(,"bounds":[)";
      for (std::size_t i = 0; i < entry.bounds.size(); ++i) {
        const auto& b = entry.bounds[i];
        if (i > 0) out += ",";
        out += fmt::format(R"({{"n":{},"integral":{},"riemann_sum":{},"slack":{},"holds":{}}})", b.n,
                           format_float(b.integral), format_float(b.riemann_sum),
                           format_float(b.slack), b.holds ? "true" : "false");
      }
      out += "]";
    }
    if (!entry.note.empty()) out += R"(,"note":)" + json_string(entry.note);
    out += "}";
  }
  return out + "]}\n";
}

}  // namespace ppasym
