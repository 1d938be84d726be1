#pragma once

#include <string>
#include <string_view>

#include "ppasym/asymptotics.hpp"
#include "ppasym/series.hpp"
#include "ppasym/validation.hpp"

namespace ppasym {

// Writers emit fixed formatting: decimal big integers, floats with 17
// significant digits, '\n' line endings.

/// "n,count" header then one row per coefficient.
std::string series_to_csv(const CoefficientSeries& series);
/// JSON array of decimal strings.
std::string series_to_json(const CoefficientSeries& series);
CoefficientSeries series_from_csv(std::string_view text);
CoefficientSeries series_from_json(std::string_view text);

/// {"logC":..,"alpha":..,"beta":..,"p":..,"stride":..}
std::string polyexp_to_json(const PolyExpParams& params);
PolyExpParams polyexp_from_json(std::string_view text);

/// {"geometric":[{"m":..,"mult":..}],"progressions":[{"x":..,"y":..,"mult":..}]}
std::string factor_set_to_json(const FactorSet& factors);
FactorSet factor_set_from_json(std::string_view text);

/// "n,log_exact,log_asym,ratio"
std::string ratio_report_to_csv(const RatioReport& report);
std::string ratio_report_to_json(const RatioReport& report);

/// Ratio cases as "case,n,log_exact,log_asym,ratio"; bound cases as
/// "case,n,integral,riemann_sum,slack,holds".
std::string harness_to_csv(const HarnessResult& result);
std::string harness_to_json(const HarnessResult& result);

std::string format_float(double value);

}  // namespace ppasym
