#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "runperm/exact.hpp"
#include "runperm/pattern.hpp"

namespace runperm {

/// Cap on the number of permuted elements (N + 1) the brute-force oracle will
/// enumerate.  Cost is (N + 1)! per pattern.
class OracleBudget {
 public:
  static constexpr std::uint32_t kDefaultMaxElements = 9;
  static constexpr std::uint32_t kHardLimit = 11;

  /// Throws std::invalid_argument unless 1 <= max_elements <= 11.
  explicit OracleBudget(std::uint32_t max_elements = kDefaultMaxElements);

  std::uint32_t max_elements() const { return max_elements_; }

 private:
  std::uint32_t max_elements_;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint32_t elements, std::uint32_t cap);
};

/// Counts permutations of {0, ..., N} satisfying p by visiting every one of
/// them in lexicographic order.  Deliberately unoptimized.
BigCount count_matching(const RunPattern& p, const OracleBudget& budget = OracleBudget());

/// Σ of count_matching over all 2^N direction words of length N; equals (N+1)!.
BigCount descent_partition_total(std::uint32_t n, const OracleBudget& budget = OracleBudget());

}  // namespace runperm
