#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "runperm/pattern.hpp"

namespace runperm {

enum class Distribution { Uniform01, Gaussian, Exponential };

std::string to_string(Distribution d);
/// "uniform" / "uniform01", "gaussian" / "normal", "exponential".  Throws std::invalid_argument.
Distribution parse_distribution(std::string_view name);

struct SimulationConfig {
  std::uint64_t seed = 0;
  std::uint64_t length = 0;
  Distribution distribution = Distribution::Uniform01;

  /// Throws std::invalid_argument when length < 3.
  void validate() const;
};

/// splitmix64 of (seed, stream): the seed for worker `stream` of a parallel
/// run.  Distinct streams give decorrelated mt19937_64 states.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// i.i.d. draws from config.distribution using mt19937_64 seeded with config.seed.
std::vector<double> generate_sequence(const SimulationConfig& config);

class TieError : public std::runtime_error {
 public:
  explicit TieError(std::size_t index);
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class InsufficientData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ExtremumKind { Max, Min };

struct Extremum {
  std::size_t index = 0;
  ExtremumKind kind = ExtremumKind::Max;

  friend bool operator==(const Extremum&, const Extremum&) = default;
};

/// Interior local extrema and the distances between consecutive ones.  The
/// censored stretches before the first and after the last extremum are not
/// spacings.
struct SpacingSample {
  std::vector<Extremum> extrema;
  std::vector<std::uint32_t> spacings;

  friend bool operator==(const SpacingSample&, const SpacingSample&) = default;
};

/// Throws TieError if two adjacent values are equal and std::invalid_argument
/// if fewer than 3 values are given.
SpacingSample extract_extrema(std::span<const double> xs);

struct SpacingStats {
  std::size_t count = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased
  double lag1_autocorrelation = 0.0;
  std::map<std::uint32_t, std::uint64_t> histogram;

  double fraction(std::uint32_t k) const;
};

/// Throws InsufficientData with fewer than 2 spacings.
SpacingStats empirical_spacing_stats(const SpacingSample& s);

/// Standard error of the mean of n spacings under the theoretical law, inflated
/// by sqrt(1 + 2 rho) for the lag-1 correlation rho.
double spacing_mean_standard_error(std::size_t n);

struct FrequencyEstimate {
  double frequency = 0.0;
  double standard_error = 0.0;  // batch means over contiguous blocks
  std::size_t trials = 0;
};

/// Frequency of consecutive spacing pairs equal to (first, second).
FrequencyEstimate pair_frequency(std::span<const std::uint32_t> spacings, std::uint32_t first,
                                 std::uint32_t second, std::size_t blocks = 100);

/// Frequency of overlapping windows of xs whose comparison word matches p.
FrequencyEstimate window_frequency(std::span<const double> xs, const RunPattern& p, std::size_t blocks = 100);

struct LlnPoint {
  std::uint64_t length = 0;    // prefix of the sequence
  std::size_t spacings = 0;
  double running_mean = 0.0;
  double band = 0.0;           // 3 dependence-corrected standard errors
  bool within_band = false;
};

/// Running spacing means on prefixes of one sequence of length
/// max(checkpoints).  config.length is ignored.  Empirical only: this explores
/// the conjectured law of large numbers and proves nothing.
std::vector<LlnPoint> lln_experiment(const SimulationConfig& config, const std::vector<std::uint64_t>& checkpoints);

/// Upper tail of the chi-square distribution, Q(df/2, statistic/2).
double chi_square_pvalue(double statistic, std::uint32_t df);

struct TestBin {
  std::string label;
  std::uint64_t observed = 0;
  double expected = 0.0;
};

struct TestReport {
  double statistic = 0.0;
  std::uint32_t df = 0;
  double p_value = 1.0;
  std::vector<TestBin> bins;
  std::size_t spacings = 0;
  double mean = 0.0;
  double mean_z = 0.0;  // approximate: spacings are weakly dependent
  double alpha = 0.0;
  bool reject = false;

  std::string decision() const { return reject ? "reject" : "accept"; }
};

inline constexpr std::size_t kMinTestSpacings = 30;

/// Chi-square goodness of fit of the spacing histogram (bins 1..6 and >= 7,
/// tail bins merged until every expected count is at least 5) against the
/// theoretical law, plus a z statistic for the spacing mean.  Rejects when the
/// chi-square p-value is below alpha.  Throws TieError, InsufficientData, or
/// std::invalid_argument for alpha outside (0, 1).
TestReport iid_test(std::span<const double> xs, double alpha);

nlohmann::json to_json(const TestReport& r);
TestReport test_report_from_json(const nlohmann::json& j);

/// One decimal number per line; blank lines are skipped.  Throws
/// std::invalid_argument naming the offending line.
std::vector<double> read_series(std::istream& in);

}  // namespace runperm
