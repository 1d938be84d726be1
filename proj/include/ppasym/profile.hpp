#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ppasym/series.hpp"

namespace ppasym {

/// A nonempty (+1, -1)-sequence: the grow/shrink pattern of an interlacing
/// sequence of partitions.
class Profile {
 public:
  explicit Profile(std::vector<int> steps);

  const std::vector<int>& steps() const noexcept { return steps_; }
  std::size_t length() const noexcept { return steps_.size(); }
  std::size_t ones() const noexcept { return ones_; }
  std::size_t minus_ones() const noexcept { return steps_.size() - ones_; }
  int operator[](std::size_t i) const { return steps_.at(i); }

  /// Canonical '+'/'-' rendering.
  std::string to_string() const;

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  std::vector<int> steps_;
  std::size_t ones_ = 0;
};

/// Parses "+--+" or "1,-1,-1,1". Errors name the 1-based character position.
Profile parse_profile(std::string_view text);

/// Pairs (i, j), 0-based, with i < j and steps[i] > steps[j].
std::vector<std::pair<std::size_t, std::size_t>> descents(const Profile& profile);
/// Pairs (i, j), 0-based, with i < j and steps[i] < steps[j].
std::vector<std::pair<std::size_t, std::size_t>> ascents(const Profile& profile);

/// Skew shape with profile (head, -1, -1, ...). The region has width
/// head.length() + 1.
class SkewProfile {
 public:
  explicit SkewProfile(Profile head) : head_(std::move(head)) {}

  const Profile& head() const noexcept { return head_; }
  /// Number of +1 steps in the head.
  std::size_t ell() const noexcept { return head_.ones(); }
  std::size_t width() const noexcept { return head_.length() + 1; }
  /// Inversions of the head alone.
  std::size_t inversions() const { return descents(head_).size(); }

 private:
  Profile head_;
};

/// Multiset of residues t in [1, h] whose progressions hk + t make up the
/// cylindric partition product.
struct CylindricWindow {
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> members;  // sorted ascending, with repetition

  friend bool operator==(const CylindricWindow&, const CylindricWindow&) = default;
};

/// Finite factors of the skew product over the full profile, with the -1 tail
/// cut at distance `limit`.
FactorSet skew_inversion_factors(const SkewProfile& profile, std::uint64_t limit);

/// Head inversions as geometric factors plus one progression (1, width - i)
/// per +1 at 1-based head position i.
FactorSet skew_decomposed_factors(const SkewProfile& profile);

CylindricWindow cylindric_window(const Profile& profile);

/// One progression (h, t) per window member.
FactorSet cp_factor_set(const Profile& profile);

}  // namespace ppasym
