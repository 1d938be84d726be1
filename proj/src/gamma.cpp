#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "ppasym/asymptotics.hpp"
#include "ppasym/error.hpp"

namespace ppasym {
namespace {

// Lanczos approximation, g = 7, nine terms (Godfrey's coefficients).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// Valid for x >= 0.5.
double lanczos_log_gamma(double x) {
  const double z = x - 1.0;
  double sum = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) sum += kLanczos[k] / (z + static_cast<double>(k));
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

void check_domain(double x) {
  if (!(x > 0.0) || x > 10.0) {
    throw Error("asymptotics", "gamma_eval needs 0 < x <= 10, got " + std::to_string(x));
  }
}

}  // namespace

double log_gamma_eval(double x) {
  check_domain(x);
  if (x < 0.5) {
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - lanczos_log_gamma(1.0 - x);
  }
  return lanczos_log_gamma(x);
}

double gamma_eval(double x) {
  check_domain(x);
  if (x == std::floor(x)) {
    double product = 1.0;
    for (int k = 2; k < static_cast<int>(x); ++k) product *= k;
    return product;
  }
  return std::exp(log_gamma_eval(x));
}

}  // namespace ppasym
