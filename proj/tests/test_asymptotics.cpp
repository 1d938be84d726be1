#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "ppasym/asymptotics.hpp"
#include "ppasym/error.hpp"
#include "ppasym/validation.hpp"

using namespace ppasym;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Profile> all_profiles(std::size_t length) {
  std::vector<Profile> out;
  for (std::uint32_t bits = 0; bits < (1u << length); ++bits) {
    std::vector<int> steps(length);
    for (std::size_t i = 0; i < length; ++i) steps[i] = (bits >> i) & 1u ? 1 : -1;
    out.emplace_back(steps);
  }
  return out;
}

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b)); }

void check_same_form(const PolyExpParams& closed, const PolyExpParams& pipeline) {
  CHECK(rel_close(closed.log_c, pipeline.log_c, 1e-10));
  CHECK(std::abs(closed.alpha - pipeline.alpha) <= 1e-13);
  CHECK(rel_close(closed.beta, pipeline.beta, 1e-14));
  CHECK(closed.p == pipeline.p);
  CHECK(closed.stride == pipeline.stride);
}

}  // namespace

TEST_CASE("gamma_eval") {
  CHECK(gamma_eval(1.0) == 1.0);
  CHECK(gamma_eval(2.0) == 1.0);
  CHECK(gamma_eval(5.0) == 24.0);
  CHECK(rel_close(gamma_eval(0.5), std::sqrt(kPi), 1e-13));
  CHECK(rel_close(gamma_eval(0.25) * gamma_eval(0.75), kPi * std::sqrt(2.0), 1e-13));
  CHECK(rel_close(gamma_eval(0.75), 1.2254167024651776451, 1e-13));
  for (int k = 1; k <= 9; ++k) {
    const double x = k / 10.0;
    CHECK(std::abs(gamma_eval(x) * gamma_eval(1.0 - x) * std::sin(kPi * x) / kPi - 1.0) <= 1e-11);
  }
  for (double x = 0.01; x <= 10.0; x += 0.0731) CHECK(rel_close(gamma_eval(x), std::tgamma(x), 1e-12));
  CHECK_THROWS_AS(gamma_eval(0.0), Error);
  CHECK_THROWS_AS(gamma_eval(-1.5), Error);
  CHECK_THROWS_AS(gamma_eval(10.5), Error);
}

TEST_CASE("PsiParams preconditions") {
  CHECK_THROWS_AS(PsiParams(0.0, 1.0, 0.0, 0.5), Error);
  CHECK_THROWS_AS(PsiParams(-1.0, 1.0, 0.0, 0.5), Error);
  CHECK_THROWS_AS(PsiParams(1.0, 0.0, 0.0, 0.5), Error);
  CHECK_THROWS_AS(PsiParams(1.0, 1.0, 0.0, 1.0), Error);
  CHECK_THROWS_AS(PsiParams(1.0, 1.0, 0.0, 0.0), Error);
  CHECK_THROWS_AS(PsiParams(1.0, 1.0, 0.0, 0.5, 0), Error);
}

TEST_CASE("psi_log_eval") {
  const PsiParams hardy_ramanujan(1.0 / (2.0 * std::sqrt(kPi)), 2.0 * kPi * kPi / 3.0, 0.25, 0.5);
  for (double n : {1.0, 10.0, 100.0}) {
    const double expected = -std::log(4.0 * std::sqrt(3.0) * n) + kPi * std::sqrt(2.0 * n / 3.0);
    CHECK(rel_close(psi_log_eval(hardy_ramanujan, static_cast<std::uint64_t>(n)), expected, 1e-13));
  }

  for (double p : {0.2, 0.5, 0.7}) {
    const PsiParams unit(std::sqrt(2.0 * kPi / (p * (1.0 - p))), 1.0, -3.7, p, 3);
    CHECK(psi_log_eval(unit.with_stride(1), 1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(psi_log_eval(unit, 3) == doctest::Approx(std::log(3.0) + psi_log_eval(unit.with_stride(1), 3)));
  }

  // PPa at n = 10^4: ln(pi^3/16) - 3 ln 10^4 + 100 pi sqrt 2.
  std::vector<ProgressionFactor> ppa{{1, 1, 1}, {1, 2, 1}, {1, 3, 1}};
  CHECK(psi_log_eval(progressions_asym(ppa), 10000) == doctest::Approx(417.318873635216).epsilon(1e-12));

  const PsiParams strided(1.0, 1.0, 0.0, 0.5, 2);
  CHECK_THROWS_WITH_AS(psi_log_eval(strided, 3), doctest::Contains("off-support index"), Error);
  CHECK_THROWS_AS(psi_log_eval(strided, 0), Error);
}

TEST_CASE("psi_to_polyexp") {
  const auto hr = psi_to_polyexp(ingham_params(1, 1));
  CHECK(hr.amplitude() == doctest::Approx(1.0 / (4.0 * std::sqrt(3.0))).epsilon(1e-13));
  CHECK(hr.alpha == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(hr.beta == doctest::Approx(kPi * std::sqrt(2.0 / 3.0)).epsilon(1e-15));
  CHECK(hr.p == 0.5);

  for (double p : {0.3, 0.5, 0.9}) {
    const auto flat = psi_to_polyexp(PsiParams(2.0, 1.0, p / 2.0 - 1.0, p));
    CHECK(flat.alpha == doctest::Approx(0.0));
    CHECK(flat.beta == 1.0);
  }

  std::vector<ProgressionFactor> ppa{{1, 1, 1}, {1, 2, 1}, {1, 3, 1}};
  const auto ppa_form = psi_to_polyexp(progressions_asym(ppa));
  CHECK(ppa_form.amplitude() == doctest::Approx(1.93789229251873876).epsilon(1e-12));
  CHECK(ppa_form.alpha == doctest::Approx(-3.0).epsilon(1e-14));
  CHECK(ppa_form.beta == doctest::Approx(4.44288293815836625).epsilon(1e-14));

  // log_c + alpha ln n + beta n^p reproduces psi_log_eval.
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  for (int trial = 0; trial < 50; ++trial) {
    const PsiParams params(0.1 + 5 * unit(rng), 0.1 + 10 * unit(rng), 4 * unit(rng) - 2, unit(rng), 1 + trial % 4);
    const auto form = psi_to_polyexp(params);
    for (std::uint64_t k : {1, 7, 1000, 123457}) {
      const std::uint64_t n = k * params.stride();
      CHECK(rel_close(form.log_eval(static_cast<double>(n)), psi_log_eval(params, n), 1e-12));
    }
  }
}

TEST_CASE("ingham_params") {
  const auto a = ingham_params(1, 1);
  CHECK(a.v() == doctest::Approx(1.0 / (2.0 * std::sqrt(kPi))).epsilon(1e-14));
  CHECK(a.r() == doctest::Approx(2.0 * kPi * kPi / 3.0).epsilon(1e-15));
  CHECK(a.b() == 0.25);
  CHECK(a.p() == 0.5);
  CHECK(a.stride() == 1);

  const auto b = ingham_params(2, 1);
  CHECK(b.v() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(b.r() == doctest::Approx(kPi * kPi / 3.0).epsilon(1e-15));
  CHECK(b.b() == 0.0);

  const auto c = ingham_params(4, 3);
  CHECK(c.v() == doctest::Approx(0.58136831701911858).epsilon(1e-13));
  CHECK(c.r() == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-15));
  CHECK(c.b() == 0.125);

  CHECK_THROWS_WITH_AS(ingham_params(2, 2), doctest::Contains("progressions_asym"), Error);
  CHECK_THROWS_AS(ingham_params(0, 1), Error);
}

TEST_CASE("combine_pair") {
  const auto a = ingham_params(1, 1);
  const auto c = ingham_params(1, 2);
  const auto ac = combine_pair(a, c);
  CHECK(ac.v() == doctest::Approx(a.v() * c.v()));
  CHECK(ac.r() == doctest::Approx(4.0 * kPi * kPi / 3.0));
  CHECK(ac.b() == 1.0);
  CHECK(ac.p() == 0.5);

  const auto aa = combine_pair(a, a);
  CHECK(aa.v() == doctest::Approx(1.0 / (4.0 * kPi)));
  CHECK(aa.b() == 0.5);

  // Three-fold product matches the width-3 plane partition parameters.
  const auto abc = combine_pair(ac, ingham_params(1, 3));
  double v = 1.0;
  double factorial = 1.0;
  for (int i = 1; i <= 3; ++i) {
    v *= factorial / std::sqrt(kPi) * std::pow(0.5, i);
    factorial *= i;
  }
  CHECK(abc.v() == doctest::Approx(v).epsilon(1e-13));
  CHECK(abc.r() == doctest::Approx(2.0 * kPi * kPi).epsilon(1e-14));
  CHECK(abc.b() == doctest::Approx(2.25));

  CHECK_THROWS_AS(combine_pair(a, PsiParams(1, 1, 0, 0.3)), Error);
  CHECK_THROWS_WITH_AS(combine_pair(a.with_stride(2), c.with_stride(4)), doctest::Contains("combine_multi"), Error);
  CHECK(combine_pair(a.with_stride(2), c.with_stride(3)).stride() == 1);
}

TEST_CASE("combine_multi") {
  const auto a = ingham_params(1, 1).with_stride(5);
  const std::vector<PsiParams> one{a};
  const auto single = combine_multi(one);
  CHECK(single.v() == doctest::Approx(a.v()));
  CHECK(single.r() == a.r());
  CHECK(single.stride() == 5);

  const std::vector<PsiParams> coprime{ingham_params(1, 1).with_stride(2), ingham_params(1, 2).with_stride(3)};
  CHECK(combine_multi(coprime).stride() == 1);
  const std::vector<PsiParams> shared{ingham_params(1, 1).with_stride(2), ingham_params(1, 2).with_stride(4)};
  const auto even = combine_multi(shared);
  CHECK(even.stride() == 2);
  CHECK(even.r() == doctest::Approx(ingham_params(1, 1).r() + ingham_params(1, 2).r()));

  const std::vector<PsiParams> mixed{ingham_params(1, 1), PsiParams(1, 1, 0, 0.25)};
  CHECK_THROWS_AS(combine_multi(mixed), Error);
  CHECK_THROWS_AS(combine_multi(std::span<const PsiParams>{}), Error);
}

TEST_CASE("property: combine is order independent") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> unit(0.1, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<PsiParams> list;
    for (int k = 0; k < 5; ++k) list.emplace_back(unit(rng), unit(rng), unit(rng) - 1.5, 0.5, 1 + (k * trial) % 6);
    const auto base = combine_multi(list);
    std::shuffle(list.begin(), list.end(), rng);
    const auto shuffled = combine_multi(list);
    CHECK(rel_close(base.v(), shuffled.v(), 1e-13));
    CHECK(rel_close(base.r(), shuffled.r(), 1e-14));
    CHECK(std::abs(base.b() - shuffled.b()) <= 1e-13);
    CHECK(base.stride() == shuffled.stride());
  }
}

TEST_CASE("stride change identity") {
  // psi_n(v z^{1/2 - y/x}, r z, b; 1/2) = z psi_{zn}(v, r, b; 1/2) when b = y/(2x) - 1/4.
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::uint64_t> small(1, 9);
  std::uniform_real_distribution<double> unit(0.1, 4.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double x = static_cast<double>(small(rng));
    const double y = static_cast<double>(small(rng));
    const double b = y / (2 * x) - 0.25;
    const double v = unit(rng);
    const double r = unit(rng);
    const std::uint64_t z = small(rng);
    const std::uint64_t n = 1 + small(rng) * 1000;
    const PsiParams shifted(v * std::pow(static_cast<double>(z), 0.5 - y / x), r * static_cast<double>(z), b, 0.5);
    const PsiParams strided(v, r, b, 0.5, z);
    CHECK(rel_close(psi_log_eval(shifted, n), psi_log_eval(strided, z * n), 1e-12));
  }
}

TEST_CASE("progressions_asym") {
  std::vector<ProgressionFactor> cpa{{4, 1, 1}, {4, 2, 1}, {4, 3, 1}, {4, 4, 1}};
  const auto cpa_form = psi_to_polyexp(progressions_asym(cpa));
  CHECK(cpa_form.amplitude() == doctest::Approx(std::sqrt(3.0) / 12.0).epsilon(1e-12));
  CHECK(cpa_form.alpha == doctest::Approx(-1.0));
  CHECK(cpa_form.beta == doctest::Approx(2.5650996603237282).epsilon(1e-14));

  // prod 1/(1-q^{2k+2}) is p(n) at q^{2n}.
  std::vector<ProgressionFactor> doubled{{2, 2, 1}};
  const auto d = progressions_asym(doubled);
  CHECK(d.stride() == 2);
  for (std::uint64_t n : {1, 10, 1000}) {
    CHECK(rel_close(psi_log_eval(d, 2 * n), psi_log_eval(ingham_params(1, 1), n), 1e-13));
  }

  // Multiplicity expands to repeated factors.
  std::vector<ProgressionFactor> twice{{1, 1, 2}};
  std::vector<ProgressionFactor> listed{{1, 1, 1}, {1, 1, 1}};
  CHECK(progressions_asym(twice).r() == progressions_asym(listed).r());
  CHECK_THROWS_AS(progressions_asym(std::span<const ProgressionFactor>{}), Error);
}

TEST_CASE("strides (2, 4): exact expansion converges on even indices") {
  FactorSet factors;
  factors.add_progression(2, 2).add_progression(4, 4);
  const auto series = expand(factors, 10000);
  for (std::size_t n = 1; n <= 99; n += 2) CHECK(series[n] == 0);
  const auto form = factor_set_asym(factors);
  CHECK(form.stride == 2);
  const std::uint64_t grid[] = {100, 1000, 10000};
  CHECK(ratio_report(series, form, grid).deviation_decreasing(3));
}

TEST_CASE("poly_correction") {
  const auto hr = pp_width_asym(1);
  const std::uint64_t one_two[] = {1, 2};
  const auto corrected = poly_correction(hr, one_two);
  CHECK(corrected.alpha == doctest::Approx(0.0));
  const double half_beta = kPi * std::sqrt(2.0 / 3.0) / 2.0;
  CHECK(corrected.amplitude() ==
        doctest::Approx(1.0 / (4.0 * std::sqrt(3.0)) / (half_beta * half_beta * 2.0)).epsilon(1e-13));
  CHECK(corrected.beta == hr.beta);
  CHECK(corrected.p == hr.p);

  std::vector<ProgressionFactor> ppb{{1, 1, 1}, {1, 3, 1}, {1, 4, 1}};
  const auto ppb_form = poly_correction(psi_to_polyexp(progressions_asym(ppb)), one_two);
  CHECK(ppb_form.amplitude() == doctest::Approx(5.8136768775562163).epsilon(1e-12));
  CHECK(ppb_form.alpha == doctest::Approx(-3.0).epsilon(1e-14));
  CHECK(ppb_form.beta == doctest::Approx(kPi * std::sqrt(2.0)).epsilon(1e-14));

  const std::uint64_t zero[] = {0};
  CHECK_THROWS_AS(poly_correction(hr, zero), Error);
  CHECK_THROWS_AS(poly_correction(hr, std::span<const std::uint64_t>{}), Error);
  auto strided = hr;
  strided.stride = 2;
  CHECK_THROWS_AS(poly_correction(strided, one_two), Error);
}

TEST_CASE("pp_width_asym") {
  const auto m1 = pp_width_asym(1);
  CHECK(m1.amplitude() == doctest::Approx(1.0 / (4.0 * std::sqrt(3.0))).epsilon(1e-14));
  CHECK(m1.alpha == -1.0);
  CHECK(m1.beta == doctest::Approx(kPi * std::sqrt(2.0 / 3.0)).epsilon(1e-15));

  const auto m3 = pp_width_asym(3);
  CHECK(m3.amplitude() == doctest::Approx(1.93789229251873876).epsilon(1e-13));
  CHECK(m3.alpha == -3.0);
  CHECK(m3.beta == doctest::Approx(4.44288293815836625).epsilon(1e-15));

  for (std::uint64_t m = 1; m <= 8; ++m) {
    std::vector<ProgressionFactor> rows;
    for (std::uint64_t i = 1; i <= m; ++i) rows.push_back({1, i, 1});
    check_same_form(pp_width_asym(m), psi_to_polyexp(progressions_asym(rows)));
  }
  CHECK_THROWS_AS(pp_width_asym(0), Error);
}

TEST_CASE("skew_pp_asym") {
  const auto ppb = skew_pp_asym(SkewProfile(parse_profile("++-+")));
  CHECK(ppb.amplitude() == doctest::Approx(5.8136768775562163).epsilon(1e-13));
  CHECK(ppb.alpha == -3.0);
  CHECK(ppb.beta == doctest::Approx(kPi * std::sqrt(2.0)).epsilon(1e-15));

  const auto ppc = skew_pp_asym(SkewProfile(parse_profile("++--+")));
  CHECK(ppc.amplitude() == doctest::Approx(11.627353755112433).epsilon(1e-13));

  for (std::uint64_t m = 1; m <= 6; ++m) {
    const auto head = SkewProfile(Profile(std::vector<int>(m, 1)));
    check_same_form(skew_pp_asym(head), pp_width_asym(m));
  }
  CHECK_THROWS_WITH_AS(skew_pp_asym(SkewProfile(parse_profile("---"))),
                       doctest::Contains("empty skew region"), Error);
}

TEST_CASE("cp_asym") {
  const auto cpa = cp_asym(parse_profile("+---"));
  CHECK(cpa.amplitude() == doctest::Approx(0.14433756729740644).epsilon(1e-13));
  CHECK(cpa.beta == doctest::Approx(2.5650996603237282).epsilon(1e-14));
  CHECK(cpa.alpha == -1.0);

  const auto cpb = cp_asym(parse_profile("+-+-"));
  CHECK(cpb.amplitude() == doctest::Approx(std::sqrt(15.0) / 24.0).epsilon(1e-13));
  CHECK(cpb.beta == doctest::Approx(kPi * std::sqrt(5.0 / 6.0)).epsilon(1e-15));
  const auto cpc = cp_asym(parse_profile("+--+"));
  CHECK(cpc.amplitude() == doctest::Approx(std::sqrt(30.0) / 48.0).epsilon(1e-13));
  CHECK(cpc.beta == cpb.beta);

  CHECK_THROWS_WITH_AS(cp_asym(parse_profile("----")), doctest::Contains("uniform profile"), Error);
  CHECK_THROWS_AS(cp_asym(parse_profile("++")), Error);
}

TEST_CASE("closed forms agree with the factor pipelines") {
  for (std::size_t length = 1; length <= 7; ++length) {
    for (const auto& profile : all_profiles(length)) {
      INFO(profile.to_string());
      const SkewProfile skew(profile);
      if (skew.ell() > 0) check_same_form(skew_pp_asym(skew), skew_pp_asym_pipeline(skew));
      if (profile.ones() > 0 && profile.ones() < length) {
        check_same_form(cp_asym(profile), cp_asym_pipeline(profile));
      }
    }
  }
}

TEST_CASE("cylindric b parameter is always 1/4") {
  for (std::size_t length = 1; length <= 10; ++length) {
    for (const auto& profile : all_profiles(length)) {
      const auto params = progressions_asym(cp_factor_set(profile).progressions());
      CHECK(std::abs(params.b() - 0.25) <= 1e-12);
    }
  }
}

TEST_CASE("pretty") {
  const auto text = pretty(pp_width_asym(3));
  CHECK(text == "1.93789/n^3 · exp(4.44288·n^0.5)");
  std::vector<ProgressionFactor> doubled{{2, 2, 1}};
  CHECK(pretty(psi_to_polyexp(progressions_asym(doubled))).find("mod 2") != std::string::npos);
}
