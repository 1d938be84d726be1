#include "ppasym/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include <fmt/format.h>

#include "ppasym/error.hpp"

namespace ppasym {
namespace {

constexpr std::string_view kModule = "asymptotics";
constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

[[noreturn]] void fail(const std::string& message) { throw Error(kModule, message); }

bool same_exponent(double p1, double p2) { return std::abs(p1 - p2) <= 1e-15; }

double log_factorial(std::uint64_t k) {
  double total = 0.0;
  for (std::uint64_t i = 2; i <= k; ++i) total += std::log(static_cast<double>(i));
  return total;
}

// Progression part of a single factor (x, y): log v, r, b at p = 1/2 with the
// stride gcd(x, y).
struct InghamTerm {
  double log_v;
  double r;
  double b;
};

InghamTerm ingham_term(std::uint64_t x, std::uint64_t y) {
  const double xd = static_cast<double>(x);
  const double ratio = static_cast<double>(y) / xd;
  // Gamma(x) = (x-1) Gamma(x-1) brings large offsets back into range.
  double log_gamma = 0.0;
  double arg = ratio;
  while (arg > 10.0) {
    arg -= 1.0;
    log_gamma += std::log(arg);
  }
  log_gamma += log_gamma_eval(arg);
  return {log_gamma - 0.5 * std::log(xd * kPi) + ratio * std::log(xd / 2.0),
          2.0 * kPi * kPi / (3.0 * xd), ratio / 2.0 - 0.25};
}

}  // namespace

PsiParams::PsiParams(double v, double r, double b, double p, std::uint64_t stride)
    : v_(v), r_(r), b_(b), p_(p), stride_(stride) {
  if (!(v > 0.0) || !std::isfinite(v)) fail("psi amplitude v must be positive and finite");
  if (!(r > 0.0) || !std::isfinite(r)) fail("psi growth scale r must be positive and finite");
  if (!std::isfinite(b)) fail("psi power shift b must be finite");
  if (!(p > 0.0 && p < 1.0)) fail("psi exponent p must lie in (0, 1)");
  if (stride == 0) fail("stride must be >= 1");
}

double PolyExpParams::amplitude() const { return std::exp(log_c); }

double PolyExpParams::log_eval(double n) const {
  return log_c + alpha * std::log(n) + beta * std::pow(n, p);
}

void validate(const PolyExpParams& params) {
  if (!std::isfinite(params.log_c) || !std::isfinite(params.alpha)) {
    fail("log_c and alpha must be finite");
  }
  if (!(params.beta > 0.0) || !std::isfinite(params.beta)) fail("beta must be positive");
  if (!(params.p > 0.0 && params.p < 1.0)) fail("p must lie in (0, 1)");
  if (params.stride == 0) fail("stride must be >= 1");
}

double psi_log_eval(const PsiParams& params, std::uint64_t n) {
  if (n == 0) fail("psi is evaluated at n >= 1");
  if (n % params.stride() != 0) {
    fail("off-support index " + std::to_string(n) + " for stride " +
         std::to_string(params.stride()));
  }
  const double p = params.p();
  const double r = params.r();
  const double b = params.b();
  const double nd = static_cast<double>(n);
  return std::log(static_cast<double>(params.stride())) + std::log(params.v()) +
         0.5 * std::log(p * (1.0 - p) / (2.0 * kPi)) + (b + (1.0 - p) / 2.0) * std::log(r) -
         (b + 1.0 - p / 2.0) * std::log(nd) + std::pow(nd, p) * std::pow(r, 1.0 - p);
}

PolyExpParams psi_to_polyexp(const PsiParams& params) {
  const double p = params.p();
  const double b = params.b();
  PolyExpParams out;
  out.log_c = std::log(static_cast<double>(params.stride())) + std::log(params.v()) +
              0.5 * std::log(p * (1.0 - p) / (2.0 * kPi)) +
              (b + (1.0 - p) / 2.0) * std::log(params.r());
  out.alpha = -(b + 1.0 - p / 2.0);
  out.beta = std::pow(params.r(), 1.0 - p);
  out.p = p;
  out.stride = params.stride();
  return out;
}

PsiParams ingham_params(std::uint64_t x, std::uint64_t y) {
  if (x == 0 || y == 0) fail("ingham_params needs x, y >= 1");
  if (std::gcd(x, y) != 1) {
    fail("ingham_params needs gcd(x, y) = 1; use progressions_asym for (" + std::to_string(x) +
         ", " + std::to_string(y) + ")");
  }
  const auto term = ingham_term(x, y);
  return {std::exp(term.log_v), term.r, term.b, 0.5, 1};
}

PsiParams combine_pair(const PsiParams& a, const PsiParams& c) {
  if (!same_exponent(a.p(), c.p())) fail("combine_pair needs equal exponents p");
  if (std::gcd(a.stride(), c.stride()) != 1) {
    fail("combine_pair needs coprime strides; use combine_multi");
  }
  return {a.v() * c.v(), a.r() + c.r(), a.b() + c.b(), a.p(), 1};
}

PsiParams combine_multi(std::span<const PsiParams> factors) {
  if (factors.empty()) fail("combine_multi needs at least one factor");
  const double p = factors.front().p();
  double log_v = 0.0;
  double r = 0.0;
  double b = 0.0;
  std::uint64_t stride = 0;
  for (const auto& f : factors) {
    if (!same_exponent(f.p(), p)) fail("combine_multi needs equal exponents p");
    log_v += std::log(f.v());
    r += f.r();
    b += f.b();
    stride = std::gcd(stride, f.stride());
  }
  return {std::exp(log_v), r, b, p, stride};
}

PsiParams progressions_asym(std::span<const ProgressionFactor> factors) {
  if (factors.empty()) fail("progressions_asym needs a nonempty factor list");
  std::vector<PsiParams> terms;
  for (const auto& f : factors) {
    if (f.step == 0 || f.offset == 0) fail("progression factors need x, y >= 1");
    // v, r, b use the unreduced (x, y); the factor lives on multiples of gcd(x, y).
    const auto term = ingham_term(f.step, f.offset);
    const PsiParams single(std::exp(term.log_v), term.r, term.b, 0.5,
                           std::gcd(f.step, f.offset));
    terms.insert(terms.end(), f.multiplicity, single);
  }
  return combine_multi(terms);
}

PolyExpParams poly_correction(const PolyExpParams& base, std::span<const std::uint64_t> moduli) {
  validate(base);
  if (moduli.empty()) fail("poly_correction needs at least one modulus");
  if (base.stride != 1) fail("poly_correction needs a base supported on every n (stride 1)");
  const double m = static_cast<double>(moduli.size());
  PolyExpParams out = base;
  out.alpha = base.alpha + m * (1.0 - base.p);
  out.log_c = base.log_c - m * std::log(base.beta * base.p);
  for (auto t : moduli) {
    if (t < 1) fail("poly_correction moduli must be >= 1");
    out.log_c -= std::log(static_cast<double>(t));
  }
  return out;
}

PolyExpParams pp_width_asym(std::uint64_t m) {
  if (m < 1) fail("pp_width_asym needs m >= 1");
  const double md = static_cast<double>(m);
  const double m2 = md * md;
  PolyExpParams out;
  out.log_c = -(m2 + 2.0 * md + 5.0) / 4.0 * kLn2 + (m2 + 1.0) / 4.0 * std::log(md / 3.0) +
              (m2 - md) / 2.0 * std::log(kPi);
  for (std::uint64_t i = 1; i < m; ++i) out.log_c += log_factorial(i);
  out.alpha = -(m2 + 3.0) / 4.0;
  out.beta = kPi * std::sqrt(2.0 * md / 3.0);
  out.p = 0.5;
  return out;
}

PolyExpParams skew_pp_asym(const SkewProfile& profile) {
  const std::uint64_t ell = profile.ell();
  if (ell == 0) fail("empty skew region: series is the constant 1");
  auto out = pp_width_asym(ell);
  // pp_width_asym(ell) carries prod_{i<ell} i!; swap it for the skew factors.
  for (std::uint64_t i = 1; i < ell; ++i) out.log_c -= log_factorial(i);
  for (const auto& [i, j] : descents(profile.head())) {
    out.log_c -= std::log(static_cast<double>(j - i));
  }
  const auto& steps = profile.head().steps();
  const std::uint64_t width = profile.width();
  for (std::uint64_t i = 1; i <= steps.size(); ++i) {
    if (steps[i - 1] == 1) out.log_c += log_factorial(width - i - 1);
  }
  return out;
}

PolyExpParams cp_asym(const Profile& profile) {
  const std::uint64_t h = profile.length();
  if (profile.ones() == 0 || profile.ones() == h) {
    fail("uniform profile: count is p(n/h) supported on multiples of h");
  }
  const double hd = static_cast<double>(h);
  const double k = static_cast<double>(profile.ones() * profile.minus_ones()) / 2.0;
  double log_c = 0.0;
  for (const auto& [i, j] : descents(profile)) {
    log_c += log_gamma_eval(static_cast<double>(j - i) / hd);
  }
  for (const auto& [i, j] : ascents(profile)) {
    log_c += log_gamma_eval(static_cast<double>(h + i - j) / hd);
  }
  log_c += 0.5 * std::log(1.0 + 2.0 * k) - std::log(4.0 * std::sqrt(3.0)) - k * std::log(2.0 * kPi);
  PolyExpParams out;
  out.log_c = log_c;
  out.alpha = -1.0;
  out.beta = kPi * std::sqrt(2.0 * (1.0 + 2.0 * k) / (3.0 * hd));
  out.p = 0.5;
  return out;
}

PolyExpParams factor_set_asym(const FactorSet& factors) {
  if (factors.progressions().empty()) {
    fail("no progression factors: the coefficients grow only polynomially");
  }
  auto out = psi_to_polyexp(progressions_asym(factors.progressions()));
  const auto moduli = factors.geometric_moduli();
  if (!moduli.empty()) out = poly_correction(out, moduli);
  return out;
}

PolyExpParams skew_pp_asym_pipeline(const SkewProfile& profile) {
  if (profile.ell() == 0) fail("empty skew region: series is the constant 1");
  return factor_set_asym(skew_decomposed_factors(profile));
}

PolyExpParams cp_asym_pipeline(const Profile& profile) {
  return factor_set_asym(cp_factor_set(profile));
}

std::string pretty(const PolyExpParams& params) {
  auto text = fmt::format("{:.6g}/n^{:.6g} · exp({:.6g}·n^{:.6g})", params.amplitude(),
                          -params.alpha, params.beta, params.p);
  if (params.stride > 1) text += fmt::format("  [n ≡ 0 mod {}]", params.stride);
  return text;
}

}  // namespace ppasym
