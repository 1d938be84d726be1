#include "ppasym/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>

#include "ppasym/error.hpp"

namespace ppasym {
namespace {

constexpr std::string_view kModule = "oracle";

using Counts = std::vector<std::uint64_t>;  // indexed by accumulated size
using Layer = std::map<Partition, Counts>;

void add_checked(std::uint64_t& target, std::uint64_t value) {
  if (__builtin_add_overflow(target, value, &target)) {
    throw Error(kModule, "count overflowed 64 bits");
  }
}

void guard(std::size_t requested, std::size_t allowed, std::string_view what) {
  if (requested > allowed) {
    throw Error(kModule, std::string(what) + " limit " + std::to_string(requested) +
                             " exceeds resource guard " + std::to_string(allowed) +
                             " (raise with PPASYM_ORACLE_MAX_N)");
  }
}

Partition from_digits(std::vector<std::uint32_t> digits) {
  while (!digits.empty() && digits.back() == 0) digits.pop_back();
  return Partition(std::move(digits));
}

// Partitions of exactly `n` with parts <= max_part, in reverse lexicographic order.
void partitions_of(std::uint32_t n, std::uint32_t max_part, std::vector<std::uint32_t>& prefix,
                   std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (std::uint32_t part = std::min(n, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_of(n - part, part, prefix, out);
    prefix.pop_back();
  }
}

std::vector<Partition> all_partitions_up_to(std::size_t n) {
  std::vector<Partition> out;
  std::vector<std::uint32_t> prefix;
  for (std::uint32_t k = 0; k <= n; ++k) partitions_of(k, k, prefix, out);
  return out;
}

CoefficientSeries to_series(const Counts& counts) {
  std::vector<BigInt> coeffs(counts.size());
  for (std::size_t n = 0; n < counts.size(); ++n) {
    mpz_set_ui(coeffs[n].get_mpz_t(), counts[n]);
  }
  return CoefficientSeries(std::move(coeffs));
}

std::size_t min_index(const Counts& counts) {
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] != 0) return i;
  }
  return counts.size();
}

// One interlacing step: every partition reachable from `from` in direction
// `step` whose size fits in `budget`.
std::vector<Partition> neighbours(const Partition& from, int step, std::uint64_t budget) {
  if (step > 0) return strips_above(from, budget);
  auto below = strips_below(from);
  std::erase_if(below, [&](const Partition& p) { return p.size() > budget; });
  return below;
}

}  // namespace

Partition::Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw Error(kModule, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw Error(kModule, "partition parts must be weakly decreasing");
    }
    size_ += parts_[i];
  }
}

bool horizontal_strip(const Partition& lam, const Partition& mu) {
  const std::size_t rows = std::max(lam.length(), mu.length());
  for (std::size_t i = 0; i < rows; ++i) {
    if (lam.part(i) < mu.part(i)) return false;
    if (mu.part(i) < lam.part(i + 1)) return false;
  }
  return true;
}

OracleLimits OracleLimits::from_env() {
  OracleLimits limits;
  if (const char* raw = std::getenv("PPASYM_ORACLE_MAX_N"); raw != nullptr && *raw != '\0') {
    char* end = nullptr;
    const unsigned long value = std::strtoul(raw, &end, 10);
    if (end == raw || *end != '\0') {
      throw Error(kModule, std::string("PPASYM_ORACLE_MAX_N is not an integer: ") + raw);
    }
    limits.max_count_size = value;
    limits.max_direct_size = value;
  }
  return limits;
}

std::vector<Partition> partitions_up_to(std::size_t n, const OracleLimits& limits) {
  guard(n, limits.max_partition_size, "partition enumeration");
  return all_partitions_up_to(n);
}

std::vector<Partition> strips_below(const Partition& lam) {
  // mu_i ranges over [lam_{i+1}, lam_i].
  std::vector<Partition> out;
  std::vector<std::uint32_t> digits(lam.length());
  std::function<void(std::size_t)> fill = [&](std::size_t i) {
    if (i == lam.length()) {
      out.push_back(from_digits(digits));
      return;
    }
    for (std::uint32_t v = lam.part(i + 1); v <= lam.part(i); ++v) {
      digits[i] = v;
      fill(i + 1);
    }
  };
  fill(0);
  return out;
}

std::vector<Partition> strips_above(const Partition& mu, std::uint64_t max_size) {
  // lam_1 >= mu_1 and lam_i ranges over [mu_i, mu_{i-1}] for i >= 2; at most
  // one new row.
  std::vector<Partition> out;
  if (mu.size() > max_size) return out;
  const std::size_t rows = mu.length() + 1;
  std::vector<std::uint32_t> digits(rows);
  std::function<void(std::size_t, std::uint64_t)> fill = [&](std::size_t i, std::uint64_t spare) {
    if (i == rows) {
      out.push_back(from_digits(digits));
      return;
    }
    const std::uint32_t low = mu.part(i);
    const std::uint64_t cap = i == 0 ? low + spare : std::min<std::uint64_t>(mu.part(i - 1), low + spare);
    for (std::uint64_t v = low; v <= cap; ++v) {
      digits[i] = static_cast<std::uint32_t>(v);
      fill(i + 1, spare - (v - low));
    }
  };
  fill(0, max_size - mu.size());
  return out;
}

CoefficientSeries count_skew_pp(const SkewProfile& head, std::size_t limit,
                                const OracleLimits& limits) {
  guard(limit, limits.max_count_size, "skew plane partition count");
  // After the head, `limit` tail steps suffice: lam^L is nonempty whenever any
  // tail partition is, so a sequence still nonempty after `limit` tail steps
  // already has size > limit.
  std::vector<int> steps = head.head().steps();
  steps.insert(steps.end(), limit, -1);

  Layer layer;
  layer[Partition{}] = Counts(limit + 1, 0);
  layer[Partition{}][0] = 1;
  for (int step : steps) {
    Layer next;
    for (const auto& [from, counts] : layer) {
      const std::size_t lowest = min_index(counts);
      if (lowest > limit) continue;
      for (const auto& to : neighbours(from, step, limit - lowest)) {
        auto [slot, inserted] = next.try_emplace(to, Counts(limit + 1, 0));
        for (std::size_t s = lowest; s + to.size() <= limit; ++s) {
          if (counts[s] != 0) add_checked(slot->second[s + to.size()], counts[s]);
        }
      }
    }
    layer = std::move(next);
  }
  const auto it = layer.find(Partition{});
  return to_series(it == layer.end() ? Counts(limit + 1, 0) : it->second);
}

CoefficientSeries count_cp(const Profile& profile, std::size_t limit, const OracleLimits& limits) {
  guard(limit, limits.max_count_size, "cylindric partition count");
  const auto& steps = profile.steps();
  Counts total(limit + 1, 0);
  for (const auto& start : all_partitions_up_to(limit)) {
    Layer layer;
    layer[start] = Counts(limit + 1, 0);
    layer[start][start.size()] = 1;
    // lam^0 .. lam^{h-1} contribute to the size; lam^h must equal lam^0.
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
      Layer next;
      for (const auto& [from, counts] : layer) {
        const std::size_t lowest = min_index(counts);
        if (lowest > limit) continue;
        for (const auto& to : neighbours(from, steps[i], limit - lowest)) {
          auto [slot, inserted] = next.try_emplace(to, Counts(limit + 1, 0));
          for (std::size_t s = lowest; s + to.size() <= limit; ++s) {
            if (counts[s] != 0) add_checked(slot->second[s + to.size()], counts[s]);
          }
        }
      }
      layer = std::move(next);
    }
    const int closing = steps.back();
    for (const auto& [last, counts] : layer) {
      const bool closes = closing > 0 ? horizontal_strip(start, last) : horizontal_strip(last, start);
      if (!closes) continue;
      for (std::size_t s = 0; s <= limit; ++s) add_checked(total[s], counts[s]);
    }
  }
  return to_series(total);
}

CoefficientSeries count_pp_width_direct(std::size_t width, std::size_t limit,
                                        const OracleLimits& limits) {
  if (width < 1) throw Error(kModule, "plane partition width must be >= 1");
  guard(limit, limits.max_direct_size, "direct plane partition count");
  // Each nonzero row holds at least one cell, so rows beyond `limit` stay empty.
  const std::size_t rows = std::min(width, std::max<std::size_t>(limit, 1));
  Counts counts(limit + 1, 0);

  // Row r is a weakly decreasing sequence bounded entrywise by row r-1.
  std::function<void(std::size_t, const std::vector<std::uint32_t>&, std::uint64_t)> next_row;
  next_row = [&](std::size_t row, const std::vector<std::uint32_t>& above, std::uint64_t used) {
    counts[used] += 1;  // every later row empty
    if (row == rows) return;
    std::vector<std::uint32_t> current(above.size(), 0);
    std::function<void(std::size_t, std::uint64_t)> fill = [&](std::size_t col, std::uint64_t size) {
      if (col == above.size()) {
        if (size > 0) {
          std::vector<std::uint32_t> trimmed(current);
          while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
          next_row(row + 1, trimmed, used + size);
        }
        return;
      }
      const std::uint32_t cap = col == 0 ? above[col] : std::min(above[col], current[col - 1]);
      for (std::uint32_t v = 0; v <= cap && used + size + v <= limit; ++v) {
        current[col] = v;
        fill(col + 1, size + v);
      }
      current[col] = 0;
    };
    fill(0, 0);
  };

  // Bound the first row by the size limit.
  next_row(0, std::vector<std::uint32_t>(limit, static_cast<std::uint32_t>(limit)), 0);
  return to_series(counts);
}

bool follows_profile(const std::vector<Partition>& sequence, const Profile& profile) {
  if (sequence.size() != profile.length() + 1) return false;
  for (std::size_t i = 0; i < profile.length(); ++i) {
    const bool ok = profile[i] > 0 ? horizontal_strip(sequence[i + 1], sequence[i])
                                   : horizontal_strip(sequence[i], sequence[i + 1]);
    if (!ok) return false;
  }
  return true;
}

bool is_skew_plane_partition(const std::vector<Partition>& sequence, const Profile& profile) {
  return follows_profile(sequence, profile) && sequence.front().empty() && sequence.back().empty();
}

bool is_cylindric_partition(const std::vector<Partition>& sequence, const Profile& profile) {
  return follows_profile(sequence, profile) && sequence.front() == sequence.back();
}

}  // namespace ppasym
