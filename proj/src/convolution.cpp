#include "runperm/convolution.hpp"

#include <map>
#include <optional>
#include <stdexcept>

namespace runperm {
namespace {

enum class Split { Max, Min, Bilateral };

bool uses(Split split, BoundaryKind kind) {
  switch (split) {
    case Split::Max: return kind == BoundaryKind::Peak;
    case Split::Min: return kind == BoundaryKind::Valley;
    case Split::Bilateral: return true;
  }
  return false;
}

// Runs [0, cut) with the last one shortened by one; nullopt when cut == 0.
std::optional<RunPattern> left_of(const RunPattern& p, std::size_t cut) {
  if (cut == 0) return std::nullopt;
  std::vector<Run> runs(p.runs().begin(), p.runs().begin() + static_cast<std::ptrdiff_t>(cut));
  --runs.back().length;
  return RunPattern::canonicalize(std::move(runs));
}

// Runs [cut, m) with the first one shifted by delta; nullopt when cut == m.
std::optional<RunPattern> right_of(const RunPattern& p, std::size_t cut, int delta) {
  if (cut == p.size()) return std::nullopt;
  std::vector<Run> runs(p.runs().begin() + static_cast<std::ptrdiff_t>(cut), p.runs().end());
  runs.front().length = static_cast<std::uint32_t>(static_cast<std::int64_t>(runs.front().length) + delta);
  return RunPattern::canonicalize(std::move(runs));
}

class SplitSolver {
 public:
  explicit SplitSolver(Split split) : split_(split) {}

  ExactRational probability(const RunPattern& p) {
    if (p.empty()) return 1;
    const PatternKey key = canonical_key(p);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    ExactRational sum = 0;
    bool any = false;
    for (const Boundary& b : boundaries(p)) {
      if (!uses(split_, b.kind)) continue;
      any = true;
      ExactRational term = 1;
      if (auto left = left_of(p, b.run_index)) term *= probability(*left);
      if (auto right = right_of(p, b.run_index, -1)) term *= probability(*right);
      sum += term;
    }
    if (!any) throw std::logic_error("no admissible boundary in pattern " + format_pattern(p));

    ExactRational scale(p.total() + 1);
    if (split_ == Split::Bilateral) scale *= 2;
    ExactRational result = sum / scale;
    memo_.emplace(key, result);
    return result;
  }

  BigCount count(const RunPattern& p) {
    const ExactRational scaled = probability(p) * ExactRational(factorial(p.total() + 1));
    if (scaled.get_den() != 1) {
      throw std::logic_error("split route produced non-integral count " + to_string(scaled) + " for " +
                             format_pattern(p));
    }
    return scaled.get_num();
  }

 private:
  Split split_;
  std::map<PatternKey, ExactRational> memo_;
};

}  // namespace

BigCount omega_via_max_split(const RunPattern& p) { return SplitSolver(Split::Max).count(p); }

BigCount omega_via_min_split(const RunPattern& p) { return SplitSolver(Split::Min).count(p); }

BigCount omega_via_bilateral(const RunPattern& p) { return SplitSolver(Split::Bilateral).count(p); }

ExactRational bilateral_increment_variant(const RunPattern& p, OmegaEngine& engine) {
  ExactRational sum = 0;
  for (const Boundary& b : boundaries(p)) {
    ExactRational term = 1;
    if (auto left = left_of(p, b.run_index)) term *= engine.omega_prime(*left);
    if (auto right = right_of(p, b.run_index, +1)) term *= engine.omega_prime(*right);
    sum += term;
  }
  return sum / ExactRational(2 * (p.total() + 1));
}

}  // namespace runperm
