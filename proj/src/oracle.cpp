#include "runperm/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace runperm {

OracleBudget::OracleBudget(std::uint32_t max_elements) : max_elements_(max_elements) {
  if (max_elements < 1 || max_elements > kHardLimit) {
    throw std::invalid_argument("oracle budget must be between 1 and " + std::to_string(kHardLimit) +
                                " elements, got " + std::to_string(max_elements));
  }
}

BudgetExceeded::BudgetExceeded(std::uint32_t elements, std::uint32_t cap)
    : std::runtime_error("brute-force oracle needs " + std::to_string(elements) + " elements, budget is " +
                         std::to_string(cap)) {}

namespace {

void check_budget(std::uint32_t elements, const OracleBudget& budget) {
  if (elements > budget.max_elements()) throw BudgetExceeded(elements, budget.max_elements());
}

std::uint64_t count_word(const std::vector<Direction>& word) {
  std::vector<int> perm(word.size() + 1);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (std::size_t j = 0; j < word.size(); ++j) {
      const bool up = perm[j] < perm[j + 1];
      if (up != (word[j] == Direction::Up)) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

BigCount count_matching(const RunPattern& p, const OracleBudget& budget) {
  check_budget(p.total() + 1, budget);
  return BigCount(static_cast<unsigned long>(count_word(p.direction_word())));
}

BigCount descent_partition_total(std::uint32_t n, const OracleBudget& budget) {
  check_budget(n + 1, budget);
  BigCount total = 0;
  std::vector<Direction> word(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::uint32_t j = 0; j < n; ++j) word[j] = (mask >> j) & 1 ? Direction::Down : Direction::Up;
    total += static_cast<unsigned long>(count_word(word));
  }
  return total;
}

}  // namespace runperm
