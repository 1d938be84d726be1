#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ppasym/asymptotics.hpp"
#include "ppasym/series.hpp"

namespace ppasym {

struct RatioRow {
  std::uint64_t n = 0;
  double log_exact = 0.0;
  double log_asym = 0.0;
  double ratio = 1.0;  // exp(log_exact - log_asym)
};

struct RatioReport {
  std::vector<RatioRow> rows;  // sorted by n

  /// |ratio - 1| at each row.
  std::vector<double> deviations() const;
  /// |ratio - 1| strictly decreasing across the last `count` rows.
  bool deviation_decreasing(std::size_t count = 3) const;
};

/// Builds rows from log values; checkpoints are sorted and deduplicated.
RatioReport ratio_report_from_logs(std::span<const std::uint64_t> checkpoints,
                                   const std::function<double(std::uint64_t)>& log_exact,
                                   const std::function<double(std::uint64_t)>& log_asym);

/// Exact series against an asymptotic form at the checkpoints.
RatioReport ratio_report(const CoefficientSeries& series, const PolyExpParams& asym,
                         std::span<const std::uint64_t> checkpoints);

/// Decade grid 10^2, 10^3, ... up to `limit`.
std::vector<std::uint64_t> decade_checkpoints(std::uint64_t limit);

/// Convolves synthetic sequences a_{t1 k} = t1 psi_{t1 k}(a), c_{t2 k} = t2 psi_{t2 k}(c)
/// (with a_0 = c_0 = 1) in log space and compares d_n with `predicted`.
RatioReport synth_convolution_check(const PsiParams& a, const PsiParams& c,
                                    std::span<const std::uint64_t> checkpoints,
                                    const PsiParams& predicted);
/// Same, predicting with combine_pair(a, c).
RatioReport synth_convolution_check(const PsiParams& a, const PsiParams& c,
                                    std::span<const std::uint64_t> checkpoints);

/// A smooth test function on an interval with a declared interior maximum.
struct TestFunction {
  std::string name;
  double a = 0.0;
  double b = 1.0;
  double x0 = 0.5;
  std::function<double(double)> f;
  double f2_at_x0 = 0.0;  // f''(x0); NaN when f is not twice differentiable
  bool for_laplace = false;
  bool for_sum_integral = false;
  bool expect_rejection = false;  // control entry with two maxima
};

/// f(x) = r1^{1-p} x^p + r2^{1-p} (1-x)^p on [lo, hi], maximised at r1 / (r1 + r2).
TestFunction split_power_function(double r1, double r2, double p, double lo = 0.01,
                                  double hi = 0.99);

/// Gaussian, tent, Gaussian bump, the split power function at p = 1/2 (two
/// weightings) and a two-maximum control.
std::vector<TestFunction> function_catalog();
const TestFunction& catalog_entry(const std::string& name);

/// Integral of exp(n f) over [a, b] against exp(n f(x0)) sqrt(2 pi / (-n f''(x0))).
RatioReport laplace_check(const TestFunction& fn, double a, double b,
                          std::span<const std::uint64_t> n_list);

struct SumIntegralBounds {
  std::uint64_t n = 0;
  double integral = 0.0;
  double riemann_sum = 0.0;  // (1/n) sum_{ceil(na) <= i <= floor(nb)} f(i/n)
  double slack = 0.0;        // f(x0) / n
  bool holds = false;
};

/// Integral - f(x0)/n <= Riemann sum <= integral + f(x0)/n for a nonnegative
/// unimodal f.
SumIntegralBounds sum_integral_bounds(const TestFunction& fn, double a, double b, std::uint64_t n);
bool sum_integral_bounds_check(const TestFunction& fn, double a, double b, std::uint64_t n);

/// One named case inside a harness run.
struct HarnessCase {
  std::string name;
  bool passed = false;
  RatioReport ratios;
  std::vector<SumIntegralBounds> bounds;
  std::string note;  // set when the case passes by rejecting its input
};

struct HarnessResult {
  std::string harness;
  std::vector<HarnessCase> cases;

  bool passed() const;
};

/// Two-factor convolution: Ingham(1,1) squared, strides (2, 3) at p = 1/2,
/// and a p = 1/3 pair, over {10^3, 10^4, 3*10^4}.
HarnessResult run_theorem1_harness();
/// Partitions times 1/((1-q)(1-q^2)) against the polynomial-factor correction.
HarnessResult run_theorem3_harness(std::uint64_t limit = 10000);
HarnessResult run_laplace_harness();
HarnessResult run_sum_integral_harness();
/// Dispatches on "theorem1", "theorem3", "laplace" or "sum-integral".
HarnessResult run_harness(const std::string& name);

}  // namespace ppasym
