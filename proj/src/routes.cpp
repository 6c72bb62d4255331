#include "runperm/routes.hpp"

#include <stdexcept>

#include "runperm/convolution.hpp"

namespace runperm {

std::string to_string(Route r) {
  switch (r) {
    case Route::Recurrence: return "recurrence";
    case Route::MaxSplit: return "max";
    case Route::MinSplit: return "min";
    case Route::Bilateral: return "bilateral";
    case Route::Oracle: return "oracle";
  }
  return "unknown";
}

Route parse_route(std::string_view name) {
  for (Route r : kAllRoutes) {
    if (to_string(r) == name) return r;
  }
  throw std::invalid_argument("unknown route '" + std::string(name) + "'");
}

BigCount omega_by(Route route, const RunPattern& p, OmegaEngine& engine, const OracleBudget& budget) {
  switch (route) {
    case Route::Recurrence: return engine.omega(p);
    case Route::MaxSplit: return omega_via_max_split(p);
    case Route::MinSplit: return omega_via_min_split(p);
    case Route::Bilateral: return omega_via_bilateral(p);
    case Route::Oracle: return count_matching(p, budget);
  }
  throw std::invalid_argument("unknown route");
}

CrossCheck cross_check(const RunPattern& p, OmegaEngine& engine, const OracleBudget& budget) {
  CrossCheck out;
  for (Route r : kAllRoutes) {
    try {
      out.values.push_back({r, omega_by(r, p, engine, budget)});
    } catch (const BudgetExceeded& e) {
      out.oracle_skipped = e.what();
    }
  }
  for (const RouteValue& v : out.values) {
    if (v.value != out.values.front().value) out.agree = false;
  }
  return out;
}

}  // namespace runperm
