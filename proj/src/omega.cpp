#include "runperm/omega.hpp"

#include <cassert>
#include <mutex>

namespace runperm {

std::optional<BigCount> MemoTable::find(const PatternKey& key) const {
  std::shared_lock lock(mutex_);
  if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  return std::nullopt;
}

BigCount MemoTable::insert(const PatternKey& key, const BigCount& value) {
  std::unique_lock lock(mutex_);
  return entries_.try_emplace(key, value).first->second;
}

void MemoTable::overwrite_for_testing(const PatternKey& key, const BigCount& value) {
  std::unique_lock lock(mutex_);
  entries_.insert_or_assign(key, value);
}

std::size_t MemoTable::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

void MemoTable::clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
}

BigCount omega_closed_form(const RunPattern& p) {
  assert(p.size() <= 2);
  if (p.size() < 2) return 1;
  return binomial(p.total(), p.runs()[0].length);
}

BigCount multinomial_bound(const RunPattern& p) {
  BigCount out = factorial(p.total());
  for (const Run& r : p.runs()) out /= factorial(r.length);
  return out;
}

ExactRational to_probability(const BigCount& omega, const RunPattern& p) {
  return make_rational(omega, factorial(p.total() + 1));
}

BigCount OmegaEngine::omega(const RunPattern& p) {
  if (p.size() <= 2) return omega_closed_form(p);

  const PatternKey key = canonical_key(p);
  if (auto hit = memo_.find(key)) return *hit;

  BigCount sum = 0;
  std::vector<Run> runs = p.runs();
  for (Run& r : runs) {
    --r.length;
    sum += omega(RunPattern::canonicalize(runs));
    ++r.length;
  }
  return memo_.insert(key, sum);
}

ExactRational OmegaEngine::omega_prime(const RunPattern& p) { return to_probability(omega(p), p); }

}  // namespace runperm
