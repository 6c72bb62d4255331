#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "runperm/exact.hpp"
#include "runperm/omega.hpp"
#include "runperm/oracle.hpp"
#include "runperm/pattern.hpp"

namespace runperm {

enum class Route { Recurrence, MaxSplit, MinSplit, Bilateral, Oracle };

inline constexpr Route kAllRoutes[] = {Route::Recurrence, Route::MaxSplit, Route::MinSplit, Route::Bilateral,
                                       Route::Oracle};

std::string to_string(Route r);
/// "recurrence", "max", "min", "bilateral", "oracle".  Throws std::invalid_argument.
Route parse_route(std::string_view name);

/// Ω(p) by the chosen route.  The oracle route throws BudgetExceeded past the budget.
BigCount omega_by(Route route, const RunPattern& p, OmegaEngine& engine, const OracleBudget& budget = OracleBudget());

struct RouteValue {
  Route route;
  BigCount value;
};

struct CrossCheck {
  std::vector<RouteValue> values;
  /// Set when the pattern was too large for the oracle; the oracle is then
  /// left out of the comparison.
  std::optional<std::string> oracle_skipped;
  bool agree = true;
};

/// Evaluates every route and reports whether they all agree.
CrossCheck cross_check(const RunPattern& p, OmegaEngine& engine, const OracleBudget& budget = OracleBudget());

}  // namespace runperm
