#include "ppasym/profile.hpp"

#include <algorithm>
#include <cctype>

#include "ppasym/error.hpp"

namespace ppasym {
namespace {

constexpr std::string_view kModule = "profile";

[[noreturn]] void fail_at(std::size_t position, std::string_view what) {
  throw Error(kModule, "illegal profile " + std::string(what) + " at position " +
                           std::to_string(position));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Profile::Profile(std::vector<int> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) {
    throw Error(kModule, "profile must be nonempty");
  }
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (steps_[i] == 1) {
      ++ones_;
    } else if (steps_[i] != -1) {
      throw Error(kModule, "step " + std::to_string(i + 1) + " is " + std::to_string(steps_[i]) +
                               ", expected +1 or -1");
    }
  }
}

std::string Profile::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (int s : steps_) out.push_back(s > 0 ? '+' : '-');
  return out;
}

Profile parse_profile(std::string_view text) {
  if (trim(text).empty()) {
    throw Error(kModule, "empty profile string");
  }
  std::vector<int> steps;
  const bool numeric = text.find(',') != std::string_view::npos ||
                       std::any_of(text.begin(), text.end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  if (!numeric) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '+') {
        steps.push_back(1);
      } else if (text[i] == '-') {
        steps.push_back(-1);
      } else {
        fail_at(i + 1, std::string("character '") + text[i] + "'");
      }
    }
    return Profile(std::move(steps));
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view token = trim(text.substr(start, comma - start));
    if (token == "1" || token == "+1") {
      steps.push_back(1);
    } else if (token == "-1") {
      steps.push_back(-1);
    } else {
      fail_at(start + 1, "token '" + std::string(token) + "'");
    }
    start = comma + 1;
  }
  return Profile(std::move(steps));
}

std::vector<std::pair<std::size_t, std::size_t>> descents(const Profile& profile) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const auto& s = profile.steps();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] > s[j]) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

std::vector<std::pair<std::size_t, std::size_t>> ascents(const Profile& profile) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const auto& s = profile.steps();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] < s[j]) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

FactorSet skew_inversion_factors(const SkewProfile& profile, std::uint64_t limit) {
  FactorSet factors;
  for (const auto& [i, j] : descents(profile.head())) {
    if (j - i <= limit) factors.add_geometric(j - i);
  }
  // Tail -1 steps sit at 0-based positions L, L+1, ...; a +1 at i pairs with
  // each of them. Distances beyond `limit` cannot reach q^limit.
  const auto& steps = profile.head().steps();
  const std::uint64_t head_length = steps.size();
  for (std::uint64_t i = 0; i < head_length; ++i) {
    if (steps[i] != 1) continue;
    for (std::uint64_t d = head_length - i; d <= limit; ++d) factors.add_geometric(d);
  }
  return factors;
}

FactorSet skew_decomposed_factors(const SkewProfile& profile) {
  FactorSet factors;
  for (const auto& [i, j] : descents(profile.head())) factors.add_geometric(j - i);
  const auto& steps = profile.head().steps();
  const std::uint64_t width = profile.width();
  for (std::uint64_t i = 1; i <= steps.size(); ++i) {
    if (steps[i - 1] == 1) factors.add_progression(1, width - i);
  }
  return factors;
}

CylindricWindow cylindric_window(const Profile& profile) {
  const std::uint64_t h = profile.length();
  CylindricWindow window{h, {h}};
  for (const auto& [i, j] : descents(profile)) window.members.push_back(j - i);
  for (const auto& [i, j] : ascents(profile)) window.members.push_back(h + i - j);
  std::sort(window.members.begin(), window.members.end());
  return window;
}

FactorSet cp_factor_set(const Profile& profile) {
  const auto window = cylindric_window(profile);
  FactorSet factors;
  for (auto t : window.members) factors.add_progression(window.modulus, t);
  return factors;
}

}  // namespace ppasym
