#pragma once

#include <cstdint>
#include <vector>

#include "runperm/pattern.hpp"

namespace runperm::testing {

/// Canonical pattern of every direction word of length n (2^n patterns).
inline std::vector<RunPattern> all_patterns_of_size(std::uint32_t n) {
  std::vector<RunPattern> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Run> raw;
    for (std::uint32_t j = 0; j < n; ++j) raw.push_back({(mask >> j) & 1 ? Direction::Down : Direction::Up, 1});
    out.push_back(RunPattern::canonicalize(raw));
  }
  return out;
}

inline std::vector<RunPattern> all_patterns_up_to(std::uint32_t max_n) {
  std::vector<RunPattern> out;
  for (std::uint32_t n = 0; n <= max_n; ++n) {
    auto layer = all_patterns_of_size(n);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

inline RunPattern up(std::uint32_t a) { return RunPattern::canonicalize({{Direction::Up, a}}); }
inline RunPattern up_down(std::uint32_t a, std::uint32_t b) {
  return RunPattern::canonicalize({{Direction::Up, a}, {Direction::Down, b}});
}
inline RunPattern alt(std::vector<std::uint32_t> lengths) { return RunPattern::alternating(lengths); }

}  // namespace runperm::testing
