#include "ppasym/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "ppasym/error.hpp"

namespace ppasym {
namespace {

constexpr std::string_view kModule = "series";

template <typename Entry, typename Key>
void insert_merged(std::vector<Entry>& entries, Entry entry, Key key) {
  auto it = std::lower_bound(entries.begin(), entries.end(), entry,
                             [&](const Entry& a, const Entry& b) { return key(a) < key(b); });
  if (it != entries.end() && key(*it) == key(entry)) {
    it->multiplicity += entry.multiplicity;
  } else {
    entries.insert(it, entry);
  }
}

}  // namespace

CoefficientSeries CoefficientSeries::one(std::size_t limit) {
  std::vector<BigInt> coeffs(limit + 1);
  coeffs[0] = 1;
  return CoefficientSeries(std::move(coeffs));
}

CoefficientSeries::CoefficientSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw Error(kModule, "a series needs at least the constant coefficient");
  }
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (sgn(coeffs_[n]) < 0) {
      throw Error(kModule, "negative coefficient at index " + std::to_string(n));
    }
  }
}

CoefficientSeries CoefficientSeries::truncated(std::size_t limit) const {
  if (limit > this->limit()) {
    throw Error(kModule, "cannot truncate to " + std::to_string(limit) + " beyond limit " +
                             std::to_string(this->limit()));
  }
  return CoefficientSeries(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + limit + 1));
}

void CoefficientSeries::multiply_geometric_inverse(std::uint64_t m, std::uint64_t multiplicity) {
  if (m == 0) {
    throw Error(kModule, "geometric factor modulus must be >= 1");
  }
  const std::size_t n_max = limit();
  if (m > n_max) {
    return;
  }
  // 1/(1-q^m): c[n] += c[n-m] in increasing n, a stride-m prefix sum.
  for (std::uint64_t pass = 0; pass < multiplicity; ++pass) {
    for (std::size_t n = m; n <= n_max; ++n) {
      const mpz_srcptr src = coeffs_[n - m].get_mpz_t();
      if (mpz_sgn(src) != 0) {
        mpz_add(coeffs_[n].get_mpz_t(), coeffs_[n].get_mpz_t(), src);
      }
    }
  }
}

FactorSet& FactorSet::add_geometric(std::uint64_t modulus, std::uint64_t multiplicity) {
  if (modulus == 0 || multiplicity == 0) {
    throw Error(kModule, "geometric factor needs modulus >= 1 and multiplicity >= 1");
  }
  insert_merged(geometric_, GeometricFactor{modulus, multiplicity},
                [](const GeometricFactor& f) { return f.modulus; });
  return *this;
}

FactorSet& FactorSet::add_progression(std::uint64_t step, std::uint64_t offset,
                                      std::uint64_t multiplicity) {
  if (step == 0 || offset == 0 || multiplicity == 0) {
    throw Error(kModule, "progression factor needs step, offset and multiplicity >= 1");
  }
  insert_merged(progressions_, ProgressionFactor{step, offset, multiplicity},
                [](const ProgressionFactor& f) { return std::pair{f.step, f.offset}; });
  return *this;
}

FactorSet& FactorSet::merge(const FactorSet& other) {
  for (const auto& g : other.geometric_) add_geometric(g.modulus, g.multiplicity);
  for (const auto& p : other.progressions_) add_progression(p.step, p.offset, p.multiplicity);
  return *this;
}

std::uint64_t FactorSet::geometric_count() const noexcept {
  std::uint64_t total = 0;
  for (const auto& g : geometric_) total += g.multiplicity;
  return total;
}

std::vector<std::uint64_t> FactorSet::geometric_moduli() const {
  std::vector<std::uint64_t> moduli;
  for (const auto& g : geometric_) moduli.insert(moduli.end(), g.multiplicity, g.modulus);
  return moduli;
}

FactorSet FactorSet::instantiate(std::uint64_t limit) const {
  // A factor 1/(1-q^m) with m > limit is 1 + O(q^{limit+1}), so dropping it
  // leaves every coefficient up to q^limit unchanged.
  FactorSet flat;
  for (const auto& g : geometric_) {
    if (g.modulus <= limit) flat.add_geometric(g.modulus, g.multiplicity);
  }
  for (const auto& p : progressions_) {
    for (std::uint64_t m = p.offset; m <= limit; m += p.step) {
      flat.add_geometric(m, p.multiplicity);
    }
  }
  return flat;
}

CoefficientSeries apply_geometric_inverse(CoefficientSeries series, std::uint64_t m) {
  series.multiply_geometric_inverse(m);
  return series;
}

CoefficientSeries expand(const FactorSet& factors, std::size_t limit) {
  auto series = CoefficientSeries::one(limit);
  const auto flat = factors.instantiate(limit);
  for (const auto& g : flat.geometric()) {
    series.multiply_geometric_inverse(g.modulus, g.multiplicity);
  }
  return series;
}

FactorSet macmahon_factors(std::size_t limit) {
  FactorSet factors;
  for (std::uint64_t k = 1; k <= limit; ++k) factors.add_geometric(k, k);
  return factors;
}

std::vector<std::uint64_t> macmahon_cell_moduli(std::size_t limit) {
  std::vector<std::uint64_t> moduli;
  for (std::uint64_t i = 1; i <= limit; ++i) {
    for (std::uint64_t j = 1; i + j - 1 <= limit; ++j) moduli.push_back(i + j - 1);
  }
  return moduli;
}

double log_bigint(const BigInt& value) {
  if (sgn(value) <= 0) {
    throw Error(kModule, "log of zero count");
  }
  if (value == 1) return 0.0;
  // value = mantissa * 2^exponent with mantissa in [0.5, 1).
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2;
}

double log_coefficient(const CoefficientSeries& series, std::size_t n) {
  if (n > series.limit()) {
    throw Error(kModule, "index " + std::to_string(n) + " beyond series limit " +
                             std::to_string(series.limit()));
  }
  return log_bigint(series[n]);
}

}  // namespace ppasym
