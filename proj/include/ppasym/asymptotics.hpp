#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ppasym/profile.hpp"
#include "ppasym/series.hpp"

namespace ppasym {

/// psi_n(v, r, b; p) = v sqrt(p(1-p)/2pi) r^{b+(1-p)/2} n^{-(b+1-p/2)} exp(n^p r^{1-p}).
///
/// A PsiParams with stride t describes a sequence supported on multiples of t
/// whose term at index n = t k behaves like t * psi_n(v, r, b; p).
class PsiParams {
 public:
  /// Throws unless v > 0, r > 0, 0 < p < 1 and stride >= 1.
  PsiParams(double v, double r, double b, double p, std::uint64_t stride = 1);

  double v() const noexcept { return v_; }
  double r() const noexcept { return r_; }
  double b() const noexcept { return b_; }
  double p() const noexcept { return p_; }
  std::uint64_t stride() const noexcept { return stride_; }

  PsiParams with_stride(std::uint64_t stride) const { return {v_, r_, b_, p_, stride}; }

 private:
  double v_;
  double r_;
  double b_;
  double p_;
  std::uint64_t stride_;
};

/// a_n ~ C n^alpha exp(beta n^p), with C stored as its logarithm. A stride
/// t > 1 restricts the statement to n divisible by t.
struct PolyExpParams {
  double log_c = 0.0;
  double alpha = 0.0;
  double beta = 1.0;
  double p = 0.5;
  std::uint64_t stride = 1;

  double amplitude() const;
  /// log_c + alpha ln n + beta n^p.
  double log_eval(double n) const;
};

/// Throws unless beta > 0, 0 < p < 1 and stride >= 1.
void validate(const PolyExpParams& params);

/// log(t * psi_n); n must be a positive multiple of the stride.
double psi_log_eval(const PsiParams& params, std::uint64_t n);

PolyExpParams psi_to_polyexp(const PsiParams& params);

/// Asymptotics of prod_{k>=0} 1/(1-q^{xk+y}) for coprime x, y.
PsiParams ingham_params(std::uint64_t x, std::uint64_t y);

/// Product of two series on coprime strides.
PsiParams combine_pair(const PsiParams& a, const PsiParams& c);

/// Product of any number of series; the result lives on the gcd of the strides.
PsiParams combine_multi(std::span<const PsiParams> factors);

/// Progression factor list (x, y, multiplicity), combined with gcd stride.
PsiParams progressions_asym(std::span<const ProgressionFactor> factors);

/// Effect of multiplying by prod_i 1/(1-q^{t_i}).
PolyExpParams poly_correction(const PolyExpParams& base, std::span<const std::uint64_t> moduli);

/// Closed form for plane partitions with at most m rows.
PolyExpParams pp_width_asym(std::uint64_t m);

/// Closed form for skew plane partitions with profile (head, -1, -1, ...).
PolyExpParams skew_pp_asym(const SkewProfile& profile);

/// Closed form for cylindric partitions; needs both step kinds in the profile.
PolyExpParams cp_asym(const Profile& profile);

/// progressions_asym on the progression part, then poly_correction by the
/// geometric moduli when there are any.
PolyExpParams factor_set_asym(const FactorSet& factors);

/// Skew asymptotics assembled from skew_decomposed_factors.
PolyExpParams skew_pp_asym_pipeline(const SkewProfile& profile);

/// Cylindric asymptotics assembled from cp_factor_set.
PolyExpParams cp_asym_pipeline(const Profile& profile);

/// Gamma function on (0, 10].
double gamma_eval(double x);
double log_gamma_eval(double x);

/// "C/n^{-alpha} · exp(beta·n^p)" with 6 significant digits.
std::string pretty(const PolyExpParams& params);

}  // namespace ppasym
