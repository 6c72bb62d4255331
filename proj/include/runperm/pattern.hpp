#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace runperm {

enum class Direction : std::uint8_t { Up, Down };

constexpr Direction opposite(Direction d) { return d == Direction::Up ? Direction::Down : Direction::Up; }

struct Run {
  Direction direction = Direction::Up;
  std::uint32_t length = 0;

  friend bool operator==(const Run&, const Run&) = default;
};

/// A prescription of strictly monotone runs on consecutive index intervals of a
/// permutation of {0, ..., N}.  Always stored canonically: every run has length
/// at least 1 and adjacent runs have opposite directions.
class RunPattern {
 public:
  RunPattern() = default;

  /// Drops zero-length runs and merges same-direction neighbours.  A zero-length
  /// run constrains a single index, so removing it leaves the matched
  /// permutation set unchanged.
  static RunPattern canonicalize(std::vector<Run> raw);

  /// Alternating pattern starting Up, the positional form Ω(i1, j1, i2, ...).
  /// Zero lengths are allowed and canonicalized away.
  static RunPattern alternating(const std::vector<std::uint32_t>& lengths);

  const std::vector<Run>& runs() const { return runs_; }
  std::size_t size() const { return runs_.size(); }
  bool empty() const { return runs_.empty(); }

  /// N: sum of run lengths; the pattern constrains N + 1 elements.
  std::uint32_t total() const { return total_; }

  /// Direction of each adjacent comparison, length N.
  std::vector<Direction> direction_word() const;

  /// Signed lengths, Up positive.
  std::vector<std::int64_t> encode() const;

  friend bool operator==(const RunPattern&, const RunPattern&) = default;
  friend auto operator<=>(const RunPattern& a, const RunPattern& b) { return a.encode() <=> b.encode(); }

 private:
  std::vector<Run> runs_;
  std::uint32_t total_ = 0;
};

enum class BoundaryKind : std::uint8_t { Peak, Valley };

struct Boundary {
  std::uint32_t position = 0;
  BoundaryKind kind = BoundaryKind::Valley;
  /// Number of runs to the left of this boundary.
  std::size_t run_index = 0;

  friend bool operator==(const Boundary&, const Boundary&) = default;
};

/// Cumulative run sums 0 = s0 < s1 < ... < sm = N.  A position is a peak when
/// the adjacent runs force it above its neighbours and a valley otherwise.  The
/// empty pattern has the single boundary 0, labelled Valley.
std::vector<Boundary> boundaries(const RunPattern& p);

/// Value complementation: every direction flipped, order kept.
RunPattern flip(const RunPattern& p);
/// Position reversal: run order reversed and every direction flipped.
RunPattern reverse(const RunPattern& p);

/// Orbit of p under {identity, flip, reverse, reverse+flip}; sorted, no duplicates.
std::vector<RunPattern> symmetry_orbit(const RunPattern& p);

using PatternKey = std::vector<std::int64_t>;

/// Lexicographically smallest signed encoding over the symmetry orbit.
PatternKey canonical_key(const RunPattern& p);

/// Pattern text: "+2,-1,+3" (explicit directions) or "2,1,3" (alternating,
/// starting Up).  Mixed forms are rejected.  Empty string is the empty pattern.
/// Throws std::invalid_argument on malformed text.
RunPattern parse_pattern(std::string_view text);

/// Inverse of parse_pattern in the explicit-sign form.
std::string format_pattern(const RunPattern& p);

}  // namespace runperm
