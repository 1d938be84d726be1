#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ppasym/profile.hpp"
#include "ppasym/series.hpp"

namespace ppasym {

/// Weakly decreasing positive parts; the empty partition has no parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<std::uint32_t> parts);

  const std::vector<std::uint32_t>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  std::uint64_t size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }
  /// Part i (0-based), or 0 past the end.
  std::uint32_t part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<std::uint32_t> parts_;
  std::uint64_t size_ = 0;
};

/// lam / mu is a horizontal strip: lam_1 >= mu_1 >= lam_2 >= mu_2 >= ...
bool horizontal_strip(const Partition& lam, const Partition& mu);

/// Resource guards. Exceeding one is an error, never a silent truncation.
struct OracleLimits {
  std::size_t max_partition_size = 30;
  std::size_t max_count_size = 14;
  std::size_t max_direct_size = 12;

  /// Defaults, with PPASYM_ORACLE_MAX_N (if set) replacing the two counting limits.
  static OracleLimits from_env();
};

/// Every partition of size <= n, ordered by size then reverse lexicographically.
std::vector<Partition> partitions_up_to(std::size_t n, const OracleLimits& limits = {});

/// Partitions mu with lam / mu a horizontal strip (lam succ mu).
std::vector<Partition> strips_below(const Partition& lam);
/// Partitions lam with lam / mu a horizontal strip and |lam| <= max_size.
std::vector<Partition> strips_above(const Partition& mu, std::uint64_t max_size);

/// Skew plane partitions with profile (head, -1, -1, ...) counted by size.
CoefficientSeries count_skew_pp(const SkewProfile& head, std::size_t limit,
                                const OracleLimits& limits = {});

/// Cylindric partitions with the given profile counted by size.
CoefficientSeries count_cp(const Profile& profile, std::size_t limit,
                           const OracleLimits& limits = {});

/// Plane partitions with at most `width` rows, enumerated row by row.
CoefficientSeries count_pp_width_direct(std::size_t width, std::size_t limit,
                                        const OracleLimits& limits = {});

/// Checks lam^{i-1} prec lam^i for +1 steps and lam^{i-1} succ lam^i for -1
/// steps; `sequence` has steps.length() + 1 entries.
bool follows_profile(const std::vector<Partition>& sequence, const Profile& profile);

/// Skew plane partitions start and end at the empty partition.
bool is_skew_plane_partition(const std::vector<Partition>& sequence, const Profile& profile);
/// Cylindric partitions need first == last; size skips the last entry.
bool is_cylindric_partition(const std::vector<Partition>& sequence, const Profile& profile);

}  // namespace ppasym
