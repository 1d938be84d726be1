#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ppasym {

using BigInt = mpz_class;

/// Exact truncated power series sum_{n<=limit} coeffs[n] q^n with nonnegative
/// big-integer coefficients.
class CoefficientSeries {
 public:
  /// The series 1 truncated at `limit`.
  static CoefficientSeries one(std::size_t limit);

  /// Takes ownership of `coeffs`; throws if it is empty or holds a negative entry.
  explicit CoefficientSeries(std::vector<BigInt> coeffs);

  std::size_t limit() const noexcept { return coeffs_.size() - 1; }
  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
  const BigInt& operator[](std::size_t n) const { return coeffs_.at(n); }

  /// First `limit + 1` coefficients.
  CoefficientSeries truncated(std::size_t limit) const;

  /// Multiplies in place by 1/(1-q^m)^multiplicity.
  void multiply_geometric_inverse(std::uint64_t m, std::uint64_t multiplicity = 1);

  friend bool operator==(const CoefficientSeries&, const CoefficientSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// 1/(1-q^modulus)^multiplicity.
struct GeometricFactor {
  std::uint64_t modulus = 1;
  std::uint64_t multiplicity = 1;

  friend bool operator==(const GeometricFactor&, const GeometricFactor&) = default;
};

/// prod_{k>=0} 1/(1-q^{step*k+offset})^multiplicity.
struct ProgressionFactor {
  std::uint64_t step = 1;
  std::uint64_t offset = 1;
  std::uint64_t multiplicity = 1;

  friend bool operator==(const ProgressionFactor&, const ProgressionFactor&) = default;
};

/// A product of geometric and arithmetic-progression factors, kept canonical:
/// entries sorted by key and multiplicities merged.
class FactorSet {
 public:
  FactorSet() = default;

  FactorSet& add_geometric(std::uint64_t modulus, std::uint64_t multiplicity = 1);
  FactorSet& add_progression(std::uint64_t step, std::uint64_t offset,
                             std::uint64_t multiplicity = 1);
  FactorSet& merge(const FactorSet& other);

  const std::vector<GeometricFactor>& geometric() const noexcept { return geometric_; }
  const std::vector<ProgressionFactor>& progressions() const noexcept { return progressions_; }
  bool empty() const noexcept { return geometric_.empty() && progressions_.empty(); }

  /// Sum of geometric multiplicities, i.e. the number of finite factors.
  std::uint64_t geometric_count() const noexcept;

  /// Geometric moduli listed with multiplicity, ascending.
  std::vector<std::uint64_t> geometric_moduli() const;

  /// Every factor with modulus <= limit as a flat geometric FactorSet.
  FactorSet instantiate(std::uint64_t limit) const;

  friend bool operator==(const FactorSet&, const FactorSet&) = default;

 private:
  std::vector<GeometricFactor> geometric_;
  std::vector<ProgressionFactor> progressions_;
};

/// series * 1/(1-q^m), truncated at the series limit.
CoefficientSeries apply_geometric_inverse(CoefficientSeries series, std::uint64_t m);

/// Coefficients of the product of all factors up to q^limit.
CoefficientSeries expand(const FactorSet& factors, std::size_t limit);

/// prod_{k=1}^{limit} (1-q^k)^{-k}: the plane partition generating function.
FactorSet macmahon_factors(std::size_t limit);

/// prod_{i,j>=1, i+j-1<=limit} 1/(1-q^{i+j-1}) entered one (i, j) cell at a
/// time, without merging into multiplicities up front.
std::vector<std::uint64_t> macmahon_cell_moduli(std::size_t limit);

/// Natural log of coeffs[n], from the bit length and the leading 64 bits.
double log_coefficient(const CoefficientSeries& series, std::size_t n);
double log_bigint(const BigInt& value);

}  // namespace ppasym
