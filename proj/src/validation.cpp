#include "ppasym/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include <fmt/format.h>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ppasym/error.hpp"

namespace ppasym {
namespace {

constexpr std::string_view kModule = "validation";
constexpr double kPi = std::numbers::pi;
constexpr std::size_t kGridIntervals = 2000;

[[noreturn]] void fail(const std::string& message) { throw Error(kModule, message); }

// log(exp(x_1) + ... + exp(x_k)) without overflow.
double log_sum_exp(const std::vector<double>& terms) {
  const double top = *std::max_element(terms.begin(), terms.end());
  double sum = 0.0;
  for (double t : terms) sum += std::exp(t - top);
  return top + std::log(sum);
}

// Log of the synthetic sequence t psi_n at a supported index, log 1 at n = 0.
double synthetic_log_term(const PsiParams& params, std::uint64_t n) {
  return n == 0 ? 0.0 : psi_log_eval(params, n);
}

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol) {
  using boost::math::quadrature::gauss_kronrod;
  double error = 0.0;
  const double value = gauss_kronrod<double, 61>::integrate(f, a, b, 20, rel_tol, &error);
  if (!(error <= rel_tol * std::abs(value))) {
    fail(fmt::format("quadrature on [{}, {}] missed its tolerance (value {:.6g}, error estimate {:.3g})", a, b,
                     value, error));
  }
  return value;
}

std::vector<double> grid(double a, double b) {
  std::vector<double> xs(kGridIntervals + 1);
  for (std::size_t k = 0; k <= kGridIntervals; ++k) {
    xs[k] = a + (b - a) * static_cast<double>(k) / static_cast<double>(kGridIntervals);
  }
  return xs;
}

void check_interval(const TestFunction& fn, double a, double b) {
  if (!(a < b)) fail("interval needs a < b");
  if (!(fn.x0 > a && fn.x0 < b)) fail("maximiser x0 of '" + fn.name + "' is not interior");
}

// A second grid local maximum within 1e-12 of f(x0) means x0 is not the
// unique maximiser.
void check_unique_maximum(const TestFunction& fn, double a, double b) {
  const double top = fn.f(fn.x0);
  const auto xs = grid(a, b);
  const double spacing = (b - a) / static_cast<double>(kGridIntervals);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double value = fn.f(xs[k]);
    if (value > top + 1e-12) fail("x0 is not the maximum of '" + fn.name + "'");
    const bool left_ok = k == 0 || value >= fn.f(xs[k - 1]);
    const bool right_ok = k + 1 == xs.size() || value >= fn.f(xs[k + 1]);
    if (left_ok && right_ok && std::abs(xs[k] - fn.x0) > 2.0 * spacing && value >= top - 1e-12) {
      fail("non-unique maximum of '" + fn.name + "' near x = " + std::to_string(xs[k]));
    }
  }
}

void check_unimodal(const TestFunction& fn, double a, double b) {
  auto xs = grid(a, b);
  xs.push_back(fn.x0);
  std::sort(xs.begin(), xs.end());
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    const double here = fn.f(xs[k]);
    const double next = fn.f(xs[k + 1]);
    if (here < 0.0) fail("'" + fn.name + "' is negative on the interval");
    const double slack = 1e-14 * std::max(1.0, std::abs(here));
    const bool rising_side = xs[k + 1] <= fn.x0;
    if (rising_side ? next < here - slack : next > here + slack) {
      fail("'" + fn.name + "' is not unimodal about x0 = " + std::to_string(fn.x0));
    }
  }
}

HarnessCase convolution_case(std::string name, const PsiParams& a, const PsiParams& c) {
  static constexpr std::uint64_t kGrid[] = {1000, 10000, 30000};
  HarnessCase out;
  out.name = std::move(name);
  out.ratios = synth_convolution_check(a, c, kGrid);
  out.passed = out.ratios.deviation_decreasing(3);
  return out;
}

}  // namespace

std::vector<double> RatioReport::deviations() const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(std::abs(std::expm1(row.log_exact - row.log_asym)));
  return out;
}

bool RatioReport::deviation_decreasing(std::size_t count) const {
  if (count < 2 || rows.size() < count) return false;
  const auto dev = deviations();
  for (std::size_t k = dev.size() - count + 1; k < dev.size(); ++k) {
    if (!(dev[k] < dev[k - 1])) return false;
  }
  return true;
}

RatioReport ratio_report_from_logs(std::span<const std::uint64_t> checkpoints,
                                   const std::function<double(std::uint64_t)>& log_exact,
                                   const std::function<double(std::uint64_t)>& log_asym) {
  std::vector<std::uint64_t> ns(checkpoints.begin(), checkpoints.end());
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  RatioReport report;
  for (auto n : ns) {
    RatioRow row;
    row.n = n;
    row.log_exact = log_exact(n);
    row.log_asym = log_asym(n);
    row.ratio = std::exp(row.log_exact - row.log_asym);
    report.rows.push_back(row);
  }
  return report;
}

RatioReport ratio_report(const CoefficientSeries& series, const PolyExpParams& asym,
                         std::span<const std::uint64_t> checkpoints) {
  validate(asym);
  for (auto n : checkpoints) {
    if (n == 0) fail("checkpoints start at n = 1");
    if (n > series.limit()) {
      fail("checkpoint " + std::to_string(n) + " beyond series limit " +
           std::to_string(series.limit()));
    }
    if (n % asym.stride != 0 || sgn(series[n]) == 0) {
      fail("zero coefficient at checkpoint " + std::to_string(n) +
           ": the asymptotic form holds only for n divisible by stride " +
           std::to_string(asym.stride) + " with a nonzero count");
    }
  }
  return ratio_report_from_logs(
      checkpoints, [&](std::uint64_t n) { return log_coefficient(series, n); },
      [&](std::uint64_t n) { return asym.log_eval(static_cast<double>(n)); });
}

std::vector<std::uint64_t> decade_checkpoints(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 100; n <= limit; n *= 10) out.push_back(n);
  return out;
}

RatioReport synth_convolution_check(const PsiParams& a, const PsiParams& c,
                                    std::span<const std::uint64_t> checkpoints,
                                    const PsiParams& predicted) {
  if (std::gcd(a.stride(), c.stride()) != 1) fail("synthetic convolution needs coprime strides");
  if (a.p() != c.p()) fail("synthetic convolution needs equal exponents p");
  const std::uint64_t t1 = a.stride();
  const std::uint64_t t2 = c.stride();
  auto log_d = [&](std::uint64_t n) {
    std::vector<double> terms;
    for (std::uint64_t i = 0; i <= n; i += t1) {
      if ((n - i) % t2 != 0) continue;
      terms.push_back(synthetic_log_term(a, i) + synthetic_log_term(c, n - i));
    }
    if (terms.empty()) fail("no convolution terms at n = " + std::to_string(n));
    return log_sum_exp(terms);
  };
  return ratio_report_from_logs(checkpoints, log_d,
                                [&](std::uint64_t n) { return psi_log_eval(predicted, n); });
}

RatioReport synth_convolution_check(const PsiParams& a, const PsiParams& c,
                                    std::span<const std::uint64_t> checkpoints) {
  return synth_convolution_check(a, c, checkpoints, combine_pair(a, c));
}

TestFunction split_power_function(double r1, double r2, double p, double lo, double hi) {
  TestFunction fn;
  fn.name = "split-power(r1=" + std::to_string(r1) + ",r2=" + std::to_string(r2) +
            ",p=" + std::to_string(p) + ")";
  fn.a = lo;
  fn.b = hi;
  fn.x0 = r1 / (r1 + r2);
  const double w1 = std::pow(r1, 1.0 - p);
  const double w2 = std::pow(r2, 1.0 - p);
  fn.f = [=](double x) { return w1 * std::pow(x, p) + w2 * std::pow(1.0 - x, p); };
  fn.f2_at_x0 = p * (p - 1.0) * (w1 * std::pow(fn.x0, p - 2.0) + w2 * std::pow(1.0 - fn.x0, p - 2.0));
  fn.for_laplace = true;
  fn.for_sum_integral = true;
  return fn;
}

std::vector<TestFunction> function_catalog() {
  std::vector<TestFunction> catalog;

  TestFunction gaussian;
  gaussian.name = "gaussian";
  gaussian.a = -1.0;
  gaussian.b = 1.0;
  gaussian.x0 = 0.0;
  gaussian.f = [](double x) { return -x * x; };
  gaussian.f2_at_x0 = -2.0;
  gaussian.for_laplace = true;
  catalog.push_back(gaussian);

  TestFunction tent;
  tent.name = "tent";
  tent.f = [](double x) { return 1.0 - std::abs(x - 0.5); };
  tent.f2_at_x0 = std::numeric_limits<double>::quiet_NaN();
  tent.for_sum_integral = true;
  catalog.push_back(tent);

  TestFunction bump;
  bump.name = "gaussian-bump";
  bump.f = [](double x) { return std::exp(-(x - 0.5) * (x - 0.5)); };
  bump.f2_at_x0 = -2.0;
  bump.for_laplace = true;
  bump.for_sum_integral = true;
  catalog.push_back(bump);

  auto even = split_power_function(1.0, 1.0, 0.5);
  even.name = "split-power-even";
  catalog.push_back(even);
  auto skewed = split_power_function(1.0, 2.0, 0.5);
  skewed.name = "split-power-skewed";
  catalog.push_back(skewed);

  TestFunction twin;
  twin.name = "twin-peaks";
  twin.a = -1.0;
  twin.b = 1.0;
  twin.x0 = 0.5;
  twin.f = [](double x) { return 1.0 - (x * x - 0.25) * (x * x - 0.25); };
  twin.f2_at_x0 = -2.0;
  twin.for_laplace = true;
  twin.for_sum_integral = true;
  twin.expect_rejection = true;
  catalog.push_back(twin);

  return catalog;
}

const TestFunction& catalog_entry(const std::string& name) {
  static const std::vector<TestFunction> catalog = function_catalog();
  for (const auto& fn : catalog) {
    if (fn.name == name) return fn;
  }
  fail("no catalog function named '" + name + "'");
}

RatioReport laplace_check(const TestFunction& fn, double a, double b,
                          std::span<const std::uint64_t> n_list) {
  check_interval(fn, a, b);
  if (!(fn.f2_at_x0 < 0.0)) fail("Laplace's method needs f''(x0) < 0 for '" + fn.name + "'");
  for (auto n : n_list) {
    if (n < 1) fail("Laplace's method needs n >= 1");
  }
  check_unique_maximum(fn, a, b);
  const double top = fn.f(fn.x0);
  // Both sides are scaled by exp(-n f(x0)) before comparison.
  auto log_integral = [&](std::uint64_t n) {
    const double nd = static_cast<double>(n);
    auto integrand = [&](double x) { return std::exp(nd * (fn.f(x) - top)); };
    const double value = integrate(integrand, a, fn.x0, 1e-10) + integrate(integrand, fn.x0, b, 1e-10);
    return nd * top + std::log(value);
  };
  auto log_laplace = [&](std::uint64_t n) {
    const double nd = static_cast<double>(n);
    return nd * top + 0.5 * std::log(2.0 * kPi / (-nd * fn.f2_at_x0));
  };
  return ratio_report_from_logs(n_list, log_integral, log_laplace);
}

SumIntegralBounds sum_integral_bounds(const TestFunction& fn, double a, double b, std::uint64_t n) {
  check_interval(fn, a, b);
  if (n < 1) fail("sum/integral bounds need n >= 1");
  check_unimodal(fn, a, b);
  const double nd = static_cast<double>(n);
  SumIntegralBounds out;
  out.n = n;
  out.integral = integrate(fn.f, a, fn.x0, 1e-12) + integrate(fn.f, fn.x0, b, 1e-12);
  const auto first = static_cast<std::int64_t>(std::ceil(nd * a - 1e-9));
  const auto last = static_cast<std::int64_t>(std::floor(nd * b + 1e-9));
  double sum = 0.0;
  for (std::int64_t i = first; i <= last; ++i) sum += fn.f(static_cast<double>(i) / nd);
  out.riemann_sum = sum / nd;
  out.slack = fn.f(fn.x0) / nd;
  out.holds = out.integral - out.slack <= out.riemann_sum && out.riemann_sum <= out.integral + out.slack;
  return out;
}

bool sum_integral_bounds_check(const TestFunction& fn, double a, double b, std::uint64_t n) {
  return sum_integral_bounds(fn, a, b, n).holds;
}

bool HarnessResult::passed() const {
  return !cases.empty() &&
         std::all_of(cases.begin(), cases.end(), [](const HarnessCase& c) { return c.passed; });
}

HarnessResult run_theorem1_harness() {
  HarnessResult result{"theorem1", {}};
  const auto partitions = ingham_params(1, 1);
  result.cases.push_back(convolution_case("ingham(1,1)^2", partitions, partitions));
  result.cases.push_back(convolution_case("strides(2,3),p=1/2", partitions.with_stride(2),
                                          ingham_params(1, 2).with_stride(3)));
  result.cases.push_back(convolution_case("p=1/3", PsiParams(1.0, 1.0, 0.0, 1.0 / 3.0),
                                          PsiParams(2.0, 3.0, 0.5, 1.0 / 3.0)));
  return result;
}

HarnessResult run_theorem3_harness(std::uint64_t limit) {
  HarnessResult result{"theorem3", {}};
  FactorSet factors;
  factors.add_progression(1, 1).add_geometric(1).add_geometric(2);
  const std::uint64_t moduli[] = {1, 2};
  const auto asym = poly_correction(pp_width_asym(1), moduli);
  HarnessCase single;
  single.name = "partitions/((1-q)(1-q^2))";
  single.ratios = ratio_report(expand(factors, limit), asym, decade_checkpoints(limit));
  single.passed = single.ratios.deviation_decreasing(std::min<std::size_t>(3, single.ratios.rows.size()));
  result.cases.push_back(std::move(single));
  return result;
}

HarnessResult run_laplace_harness() {
  static constexpr std::uint64_t kNs[] = {100, 1000, 10000};
  HarnessResult result{"laplace", {}};
  for (const auto& fn : function_catalog()) {
    if (!fn.for_laplace) continue;
    HarnessCase entry;
    entry.name = fn.name;
    if (fn.expect_rejection) {
      try {
        laplace_check(fn, fn.a, fn.b, kNs);
      } catch (const Error& e) {
        entry.passed = true;
        entry.note = e.what();
      }
      result.cases.push_back(std::move(entry));
      continue;
    }
    entry.ratios = laplace_check(fn, fn.a, fn.b, kNs);
    if (fn.name == "gaussian") {
      // Only the tails beyond [-1, 1] separate the two sides.
      const auto dev = entry.ratios.deviations();
      entry.passed = std::all_of(dev.begin(), dev.end(), [](double d) { return d <= 1e-8; });
    } else {
      entry.passed = entry.ratios.deviation_decreasing(3);
    }
    result.cases.push_back(std::move(entry));
  }
  return result;
}

HarnessResult run_sum_integral_harness() {
  static constexpr std::uint64_t kNs[] = {10, 100, 1000};
  HarnessResult result{"sum-integral", {}};
  for (const auto& fn : function_catalog()) {
    if (!fn.for_sum_integral) continue;
    HarnessCase entry;
    entry.name = fn.name;
    if (fn.expect_rejection) {
      try {
        sum_integral_bounds(fn, fn.a, fn.b, kNs[0]);
      } catch (const Error& e) {
        entry.passed = true;
        entry.note = e.what();
      }
      result.cases.push_back(std::move(entry));
      continue;
    }
    entry.passed = true;
    for (auto n : kNs) {
      entry.bounds.push_back(sum_integral_bounds(fn, fn.a, fn.b, n));
      entry.passed = entry.passed && entry.bounds.back().holds;
    }
    result.cases.push_back(std::move(entry));
  }
  return result;
}

HarnessResult run_harness(const std::string& name) {
  if (name == "theorem1") return run_theorem1_harness();
  if (name == "theorem3") return run_theorem3_harness();
  if (name == "laplace") return run_laplace_harness();
  if (name == "sum-integral") return run_sum_integral_harness();
  fail("unknown harness '" + name + "' (expected theorem1, theorem3, laplace or sum-integral)");
}

}  // namespace ppasym
