#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "runperm/extrema.hpp"
#include "runperm/simulation.hpp"
#include "support.hpp"

using namespace runperm;

namespace {
std::vector<double> moving_average(std::uint64_t seed, std::size_t n) {
  const auto xs = generate_sequence({seed, n + 1, Distribution::Uniform01});
  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) ys[i] = 0.5 * (xs[i] + xs[i + 1]);
  return ys;
}
}  // namespace

TEST_CASE("generation is deterministic and distribution-correct") {
  const SimulationConfig cfg{42, 1000, Distribution::Uniform01};
  CHECK(generate_sequence(cfg) == generate_sequence(cfg));
  CHECK(generate_sequence(cfg) != generate_sequence({43, 1000, Distribution::Uniform01}));

  const auto big = generate_sequence({7, 1000000, Distribution::Uniform01});
  double sum = 0;
  for (double x : big) sum += x;
  const double sigma = 1.0 / std::sqrt(12.0 * 1e6);
  CHECK(std::abs(sum / 1e6 - 0.5) < 5 * sigma);

  for (Distribution d : {Distribution::Gaussian, Distribution::Exponential}) {
    const auto xs = generate_sequence({1, 10000, d});
    CHECK(xs.size() == 10000);
    if (d == Distribution::Exponential) {
      for (double x : xs) CHECK(x >= 0);
    }
  }
  CHECK_THROWS_AS(generate_sequence({1, 2, Distribution::Uniform01}), std::invalid_argument);
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) == derive_seed(1, 0));
}

TEST_CASE("distribution names") {
  CHECK(parse_distribution("uniform") == Distribution::Uniform01);
  CHECK(parse_distribution("normal") == Distribution::Gaussian);
  CHECK(parse_distribution(to_string(Distribution::Exponential)) == Distribution::Exponential);
  CHECK_THROWS_AS(parse_distribution("cauchy"), std::invalid_argument);
}

TEST_CASE("extract_extrema") {
  const std::vector<double> xs{0.1, 0.9, 0.2, 0.8, 0.3};
  const SpacingSample s = extract_extrema(xs);
  CHECK(s.extrema == std::vector<Extremum>{{1, ExtremumKind::Max}, {2, ExtremumKind::Min}, {3, ExtremumKind::Max}});
  CHECK(s.spacings == std::vector<std::uint32_t>{1, 1});

  const std::vector<double> mono{1, 2, 3, 4, 5};
  CHECK(extract_extrema(mono).extrema.empty());
  CHECK(extract_extrema(mono).spacings.empty());

  const std::vector<double> tie{0.5, 0.5, 0.1};
  CHECK_THROWS_AS(extract_extrema(tie), TieError);
  const std::vector<double> short_seq{1, 2};
  CHECK_THROWS_AS(extract_extrema(short_seq), std::invalid_argument);
}

TEST_CASE("extrema kinds alternate on random data") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto xs = generate_sequence({seed, 500, Distribution::Gaussian});
    const SpacingSample s = extract_extrema(xs);
    for (std::size_t i = 0; i + 1 < s.extrema.size(); ++i) {
      CHECK(s.extrema[i].kind != s.extrema[i + 1].kind);
      CHECK(s.spacings[i] == s.extrema[i + 1].index - s.extrema[i].index);
    }
  }
}

TEST_CASE("empirical statistics") {
  SpacingSample s;
  s.spacings = {1, 2, 1, 2};
  const SpacingStats st = empirical_spacing_stats(s);
  CHECK(st.mean == doctest::Approx(1.5));
  CHECK(st.variance == doctest::Approx(1.0 / 3.0));
  CHECK(st.lag1_autocorrelation == doctest::Approx(-0.75));
  CHECK(st.fraction(1) == doctest::Approx(0.5));
  CHECK(st.fraction(9) == 0);

  s.spacings = {1};
  CHECK_THROWS_AS(empirical_spacing_stats(s), InsufficientData);
}

TEST_CASE("pair and window frequencies") {
  const std::vector<std::uint32_t> sp{1, 1, 2, 1, 1};
  const auto f = pair_frequency(sp, 1, 1, 2);
  CHECK(f.trials == 4);
  CHECK(f.frequency == doctest::Approx(0.5));

  const std::vector<double> xs{0, 1, 2, 1, 0, 1, 2};
  const auto w = window_frequency(xs, runperm::testing::up_down(2, 2), 1);
  CHECK(w.trials == 3);
  CHECK(w.frequency == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("chi-square p-values") {
  CHECK(chi_square_pvalue(0, 3) == 1.0);
  CHECK(chi_square_pvalue(2 * std::log(2.0), 2) == doctest::Approx(0.5).epsilon(1e-12));
  // df = 1: P{Z^2 > x} = erfc(sqrt(x / 2)).
  for (double x : {0.1, 1.0, 3.841, 10.0, 50.0}) {
    CHECK(std::abs(chi_square_pvalue(x, 1) - std::erfc(std::sqrt(x / 2))) < 1e-12);
  }
  CHECK(std::abs(chi_square_pvalue(3.841, 1) - 0.05) < 1e-4);
  // df = 2: exp(-x / 2).
  for (double x : {0.5, 7.0, 40.0, 900.0}) CHECK(std::abs(chi_square_pvalue(x, 2) - std::exp(-x / 2)) < 1e-12);
  // Even df: Poisson tail sum.
  for (std::uint32_t df : {4u, 10u, 64u}) {
    for (double x : {1.0, 20.0, 80.0, 1000.0}) {
      double term = std::exp(-x / 2), sum = 0;
      for (std::uint32_t i = 0; i < df / 2; ++i) {
        sum += term;
        term *= (x / 2) / (i + 1);
      }
      CHECK(std::abs(chi_square_pvalue(x, df) - sum) < 1e-8);
    }
  }
  CHECK_THROWS_AS(chi_square_pvalue(-1, 2), std::invalid_argument);
}

TEST_CASE("iid test") {
  const auto xs = generate_sequence({99, 100000, Distribution::Uniform01});
  const TestReport r = iid_test(xs, 0.01);
  CHECK(r.p_value >= 0);
  CHECK(r.p_value <= 1);
  std::uint64_t observed = 0;
  for (const auto& b : r.bins) {
    observed += b.observed;
    CHECK(b.expected >= 5);
  }
  CHECK(observed == r.spacings);
  CHECK(r.df + 1 == r.bins.size());
  CHECK(r.bins.back().label.starts_with(">="));
  CHECK(iid_test(xs, 0.01).statistic == r.statistic);

  const TestReport alt = iid_test(moving_average(5, 100000), 0.01);
  CHECK(alt.reject);
  CHECK(alt.mean > 1.5);

  CHECK_THROWS_AS(iid_test(std::vector<double>(xs.begin(), xs.begin() + 20), 0.01), InsufficientData);
  CHECK_THROWS_AS(iid_test(xs, 0.0), std::invalid_argument);
  std::vector<double> tied = xs;
  tied[10] = tied[11];
  CHECK_THROWS_AS(iid_test(tied, 0.01), TieError);
}

TEST_CASE("bins merge for small samples") {
  const auto xs = generate_sequence({3, 60, Distribution::Uniform01});
  const TestReport r = iid_test(xs, 0.05);
  for (const auto& b : r.bins) CHECK(b.expected >= 5);
  CHECK(r.df >= 1);
}

TEST_CASE("report JSON round trip") {
  const auto xs = generate_sequence({11, 5000, Distribution::Exponential});
  const TestReport r = iid_test(xs, 0.05);
  const auto j = to_json(r);
  for (const char* key : {"statistic", "df", "p_value", "bins", "mean_z", "decision"}) CHECK(j.contains(key));
  const TestReport back = test_report_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.statistic == r.statistic);
  CHECK(back.df == r.df);
  CHECK(back.p_value == r.p_value);
  CHECK(back.mean_z == r.mean_z);
  CHECK(back.reject == r.reject);
  REQUIRE(back.bins.size() == r.bins.size());
  for (std::size_t i = 0; i < r.bins.size(); ++i) {
    CHECK(back.bins[i].label == r.bins[i].label);
    CHECK(back.bins[i].observed == r.bins[i].observed);
    CHECK(back.bins[i].expected == r.bins[i].expected);
  }
}

TEST_CASE("read_series") {
  std::istringstream in("0.5\n\n  -1.25e-3 \n+7\n");
  CHECK(read_series(in) == std::vector<double>{0.5, -1.25e-3, 7});
  std::istringstream bad("1\nabc\n");
  CHECK_THROWS_WITH_AS(read_series(bad), doctest::Contains("line 2"), std::invalid_argument);
}

TEST_CASE("lln trace") {
  const SimulationConfig cfg{2024, 0, Distribution::Uniform01};
  const auto trace = lln_experiment(cfg, {1000, 10000, 100000});
  REQUIRE(trace.size() == 3);
  for (std::size_t i = 0; i + 1 < trace.size(); ++i) {
    CHECK(trace[i].spacings < trace[i + 1].spacings);
    CHECK(trace[i].band > trace[i + 1].band);
  }
  CHECK(lln_experiment(cfg, {1000, 10000, 100000}).back().running_mean == trace.back().running_mean);
  CHECK_THROWS_AS(lln_experiment(cfg, {100, 50}), std::invalid_argument);

  // The last checkpoint covers the whole sequence.
  const auto xs = generate_sequence({2024, 100000, Distribution::Uniform01});
  CHECK(trace.back().spacings == extract_extrema(xs).spacings.size());
}
