#include <doctest.h>

#include <thread>

#include "runperm/convolution.hpp"
#include "runperm/omega.hpp"
#include "runperm/oracle.hpp"
#include "runperm/routes.hpp"
#include "support.hpp"

using namespace runperm;
using namespace runperm::testing;

TEST_CASE("omega examples") {
  OmegaEngine engine;
  CHECK(engine.omega(up(5)) == 1);
  CHECK(engine.omega(up_down(2, 3)) == 10);
  CHECK(engine.omega(alt({1, 1, 1})) == 5);
  CHECK(engine.omega(alt({1, 2, 1})) == 11);
  CHECK(engine.omega(alt({1, 2, 1, 1})) == 40);
  CHECK(engine.omega(RunPattern{}) == 1);
}

TEST_CASE("omega_prime examples") {
  OmegaEngine engine;
  CHECK(engine.omega_prime(up(1)) == ExactRational(1, 2));
  CHECK(engine.omega_prime(RunPattern{}) == 1);
  CHECK(engine.omega_prime(alt({1, 1, 1})) == ExactRational(5, 24));
}

TEST_CASE("split routes examples") {
  CHECK(omega_via_max_split(up_down(1, 1)) == 2);
  CHECK(omega_via_max_split(up_down(2, 3)) == 10);
  CHECK(omega_via_max_split(alt({1, 1, 1})) == 5);

  CHECK(omega_via_min_split(up(1)) == 1);
  CHECK(omega_via_min_split(up_down(2, 3)) == 10);
  CHECK(omega_via_min_split(alt({1, 2, 1})) == 11);

  CHECK(omega_via_bilateral(up(1)) == 1);
  CHECK(omega_via_bilateral(up_down(1, 1)) == 2);
  CHECK(omega_via_bilateral(alt({1, 1, 1})) == 5);

  // Down-first patterns have a peak at position 0.
  const RunPattern down_first = RunPattern::canonicalize({{Direction::Down, 2}, {Direction::Up, 1}});
  CHECK(omega_via_max_split(down_first) == 3);
  CHECK(omega_via_min_split(down_first) == 3);
}

TEST_CASE("increment variant of the bilateral sum is wrong") {
  OmegaEngine engine;
  CHECK(bilateral_increment_variant(up(1), engine) == ExactRational(7, 24));
  CHECK(bilateral_increment_variant(up(1), engine) != engine.omega_prime(up(1)));
}

TEST_CASE("multinomial bound") {
  CHECK(multinomial_bound(up_down(2, 3)) == 10);
  CHECK(multinomial_bound(alt({1, 1, 1})) == 6);
  CHECK(multinomial_bound(RunPattern{}) == 1);
}

TEST_CASE("all routes match the oracle for N <= 7") {
  OmegaEngine engine;
  for (const RunPattern& p : all_patterns_up_to(7)) {
    const BigCount expected = count_matching(p);
    INFO("pattern " << format_pattern(p));
    CHECK(engine.omega(p) == expected);
    CHECK(omega_via_max_split(p) == expected);
    CHECK(omega_via_min_split(p) == expected);
    CHECK(omega_via_bilateral(p) == expected);
  }
}

TEST_CASE("bound, symmetry and probability range") {
  OmegaEngine engine;
  for (const RunPattern& p : all_patterns_up_to(8)) {
    const BigCount v = engine.omega(p);
    CHECK(v >= 1);
    CHECK(v <= multinomial_bound(p));
    for (const RunPattern& q : symmetry_orbit(p)) CHECK(engine.omega(q) == v);
    const ExactRational prob = engine.omega_prime(p);
    CHECK(prob > 0);
    CHECK(prob <= 1);
    CHECK((prob == 1) == p.empty());
  }
}

TEST_CASE("omega over all direction words partitions the permutations") {
  OmegaEngine engine;
  for (std::uint32_t n = 0; n <= 10; ++n) {
    BigCount total = 0;
    for (const RunPattern& p : all_patterns_of_size(n)) total += engine.omega(p);
    CHECK(total == factorial(n + 1));
  }
}

TEST_CASE("binomial closed form for two runs") {
  OmegaEngine engine;
  for (std::uint32_t p = 0; p <= 10; ++p) {
    CHECK(engine.omega(up(p)) == 1);
    for (std::uint32_t q = 0; q <= 10; ++q) {
      const BigCount expected = factorial(p + q) / (factorial(p) * factorial(q));
      CHECK(engine.omega(up_down(p, q)) == expected);
      // Three-run patterns reach the two-run case through the recurrence.
      CHECK(omega_via_bilateral(up_down(p, q)) == expected);
    }
  }
}

TEST_CASE("memo table keeps first insertion") {
  MemoTable memo;
  const PatternKey key{1, -1, 1};
  CHECK(memo.insert(key, 5) == 5);
  CHECK(memo.insert(key, 7) == 5);
  CHECK(memo.find(key) == BigCount(5));
  CHECK_FALSE(memo.find(PatternKey{2}).has_value());
  memo.overwrite_for_testing(key, 6);
  CHECK(memo.find(key) == BigCount(6));
}

TEST_CASE("engine is safe to share between threads") {
  OmegaEngine shared;
  OmegaEngine reference;
  const std::vector<RunPattern> patterns = all_patterns_of_size(9);
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&shared, &patterns, t] {
      for (std::size_t i = t; i < patterns.size(); i += 2) shared.omega(patterns[i]);
    });
  }
  for (auto& w : workers) w.join();
  for (const RunPattern& p : patterns) CHECK(shared.omega(p) == reference.omega(p));
}

TEST_CASE("cross check detects a corrupted memo entry") {
  OmegaEngine engine;
  const RunPattern p = alt({1, 1, 1});
  CHECK(cross_check(p, engine).agree);
  engine.memo().overwrite_for_testing(canonical_key(p), 6);
  const CrossCheck corrupted = cross_check(p, engine);
  CHECK_FALSE(corrupted.agree);
  CHECK(corrupted.values.front().value == 6);
}

TEST_CASE("cross check skips the oracle past its budget") {
  OmegaEngine engine;
  const CrossCheck check = cross_check(alt({3, 3, 3, 3}), engine);
  CHECK(check.agree);
  CHECK(check.oracle_skipped.has_value());
  CHECK(check.values.size() == 4);
}

TEST_CASE("route names") {
  for (Route r : kAllRoutes) CHECK(parse_route(to_string(r)) == r);
  CHECK_THROWS_AS(parse_route("nope"), std::invalid_argument);
}
