#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <shared_mutex>

#include "runperm/exact.hpp"
#include "runperm/pattern.hpp"

namespace runperm {

/// Ω values keyed by canonical_key.  Safe for concurrent readers and writers;
/// insertion is insert-if-absent so a racing duplicate computation never
/// replaces an entry.
class MemoTable {
 public:
  std::optional<BigCount> find(const PatternKey& key) const;

  /// Stores value unless key is present; returns the stored value.
  BigCount insert(const PatternKey& key, const BigCount& value);

  /// Unconditional write.  Exists only so tests can corrupt an entry and
  /// check that cross-route verification notices.
  void overwrite_for_testing(const PatternKey& key, const BigCount& value);

  std::size_t size() const;
  void clear();

 private:
  mutable std::shared_mutex mutex_;
  std::map<PatternKey, BigCount> entries_;
};

/// Ω by the run-decrement recurrence
///   Ω(l1, ..., lm) = Σ_r Ω(l1, ..., lr - 1, ..., lm),
/// children canonicalized and memoized under the symmetry-folded key.  Patterns
/// with at most two runs use the binomial closed form directly.
class OmegaEngine {
 public:
  BigCount omega(const RunPattern& p);
  ExactRational omega_prime(const RunPattern& p);

  MemoTable& memo() { return memo_; }
  const MemoTable& memo() const { return memo_; }

 private:
  MemoTable memo_;
};

/// Ω(p) = 1 for a single run, C(p + q, p) for two runs.  Requires p.size() <= 2.
BigCount omega_closed_form(const RunPattern& p);

/// N! / (l1! ... lm!), an upper bound on Ω(p).
BigCount multinomial_bound(const RunPattern& p);

/// Ω(p) / (N + 1)! for a known Ω(p).
ExactRational to_probability(const BigCount& omega, const RunPattern& p);

}  // namespace runperm
