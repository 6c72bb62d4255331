#include "runperm/simulation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <random>

#include <boost/math/special_functions/gamma.hpp>

#include "runperm/exact.hpp"
#include "runperm/extrema.hpp"

namespace runperm {

std::string to_string(Distribution d) {
  switch (d) {
    case Distribution::Uniform01: return "uniform01";
    case Distribution::Gaussian: return "gaussian";
    case Distribution::Exponential: return "exponential";
  }
  return "unknown";
}

Distribution parse_distribution(std::string_view name) {
  if (name == "uniform" || name == "uniform01") return Distribution::Uniform01;
  if (name == "gaussian" || name == "normal") return Distribution::Gaussian;
  if (name == "exponential") return Distribution::Exponential;
  throw std::invalid_argument("unknown distribution '" + std::string(name) + "'");
}

void SimulationConfig::validate() const {
  if (length < 3) throw std::invalid_argument("simulation length must be at least 3");
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + (stream + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

template <class Dist>
std::vector<double> draw(std::mt19937_64& rng, Dist dist, std::uint64_t n) {
  std::vector<double> xs(n);
  for (double& x : xs) x = dist(rng);
  return xs;
}

double standard_error_of(const std::vector<double>& block_values) {
  const double b = static_cast<double>(block_values.size());
  if (b < 2) return 0.0;
  double mean = 0.0;
  for (double v : block_values) mean += v;
  mean /= b;
  double ss = 0.0;
  for (double v : block_values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / (b - 1) / b);
}

// Per-block frequencies of hits[i] over contiguous blocks.
FrequencyEstimate batch_means(const std::vector<char>& hits, std::size_t blocks) {
  FrequencyEstimate out;
  out.trials = hits.size();
  if (hits.empty()) return out;
  out.frequency = static_cast<double>(std::count(hits.begin(), hits.end(), 1)) / static_cast<double>(hits.size());
  blocks = std::clamp<std::size_t>(blocks, 1, hits.size());
  const std::size_t per_block = hits.size() / blocks;
  std::vector<double> values;
  values.reserve(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    const auto first = hits.begin() + static_cast<std::ptrdiff_t>(b * per_block);
    values.push_back(static_cast<double>(std::count(first, first + static_cast<std::ptrdiff_t>(per_block), 1)) /
                     static_cast<double>(per_block));
  }
  out.standard_error = standard_error_of(values);
  return out;
}

}  // namespace

std::vector<double> generate_sequence(const SimulationConfig& config) {
  config.validate();
  std::mt19937_64 rng(config.seed);
  switch (config.distribution) {
    case Distribution::Gaussian:
      return draw(rng, std::normal_distribution<double>(0.0, 1.0), config.length);
    case Distribution::Exponential:
      return draw(rng, std::exponential_distribution<double>(1.0), config.length);
    case Distribution::Uniform01:
    default:
      return draw(rng, std::uniform_real_distribution<double>(0.0, 1.0), config.length);
  }
}

TieError::TieError(std::size_t index)
    : std::runtime_error("tie between positions " + std::to_string(index) + " and " + std::to_string(index + 1) +
                         ": data must come from a continuous distribution"),
      index_(index) {}

SpacingSample extract_extrema(std::span<const double> xs) {
  if (xs.size() < 3) throw std::invalid_argument("need at least 3 values to locate an extremum");
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (xs[i] == xs[i + 1]) throw TieError(i);
  }
  SpacingSample s;
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    const bool above_left = xs[i] > xs[i - 1];
    const bool above_right = xs[i] > xs[i + 1];
    if (above_left == above_right) {
      s.extrema.push_back({i, above_left ? ExtremumKind::Max : ExtremumKind::Min});
      if (s.extrema.size() > 1) {
        s.spacings.push_back(static_cast<std::uint32_t>(i - s.extrema[s.extrema.size() - 2].index));
      }
    }
  }
  return s;
}

double SpacingStats::fraction(std::uint32_t k) const {
  if (count == 0) return 0.0;
  const auto it = histogram.find(k);
  return it == histogram.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(count);
}

SpacingStats empirical_spacing_stats(const SpacingSample& s) {
  const auto& xs = s.spacings;
  if (xs.size() < 2) throw InsufficientData("need at least 2 spacings, got " + std::to_string(xs.size()));
  SpacingStats st;
  st.count = xs.size();
  const double n = static_cast<double>(xs.size());
  double sum = 0.0;
  for (std::uint32_t k : xs) {
    sum += k;
    ++st.histogram[k];
  }
  st.mean = sum / n;
  double ss = 0.0;
  double lag = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double d = xs[i] - st.mean;
    ss += d * d;
    if (i + 1 < xs.size()) lag += d * (xs[i + 1] - st.mean);
  }
  st.variance = ss / (n - 1);
  st.lag1_autocorrelation = ss > 0 ? lag / ss : 0.0;
  return st;
}

double spacing_mean_standard_error(std::size_t n) {
  const double inflation = 1.0 + 2.0 * closed_form_lag1_correlation();
  return std::sqrt(closed_form_variance() * inflation / static_cast<double>(n));
}

FrequencyEstimate pair_frequency(std::span<const std::uint32_t> spacings, std::uint32_t first,
                                 std::uint32_t second, std::size_t blocks) {
  std::vector<char> hits;
  if (spacings.size() >= 2) hits.reserve(spacings.size() - 1);
  for (std::size_t i = 0; i + 1 < spacings.size(); ++i) {
    hits.push_back(spacings[i] == first && spacings[i + 1] == second ? 1 : 0);
  }
  return batch_means(hits, blocks);
}

FrequencyEstimate window_frequency(std::span<const double> xs, const RunPattern& p, std::size_t blocks) {
  const std::vector<Direction> word = p.direction_word();
  if (xs.size() < word.size() + 1) return {};
  std::vector<char> up(xs.size() - 1);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) up[i] = xs[i] < xs[i + 1];

  std::vector<char> hits(xs.size() - word.size());
  for (std::size_t start = 0; start < hits.size(); ++start) {
    bool match = true;
    for (std::size_t j = 0; j < word.size() && match; ++j) {
      match = static_cast<bool>(up[start + j]) == (word[j] == Direction::Up);
    }
    hits[start] = match ? 1 : 0;
  }
  return batch_means(hits, blocks);
}

std::vector<LlnPoint> lln_experiment(const SimulationConfig& config, const std::vector<std::uint64_t>& checkpoints) {
  if (checkpoints.empty()) return {};
  if (!std::is_sorted(checkpoints.begin(), checkpoints.end()) ||
      std::adjacent_find(checkpoints.begin(), checkpoints.end()) != checkpoints.end()) {
    throw std::invalid_argument("checkpoints must be strictly increasing");
  }
  SimulationConfig full = config;
  full.length = checkpoints.back();
  const std::vector<double> xs = generate_sequence(full);
  const SpacingSample sample = extract_extrema(xs);

  std::vector<LlnPoint> trace;
  std::size_t used = 0;
  double sum = 0.0;
  for (std::uint64_t length : checkpoints) {
    // An extremum at index i is visible in the prefix of this length when i + 1 < length;
    // spacing j ends at extremum j + 1.
    while (used < sample.spacings.size() && sample.extrema[used + 1].index + 1 < length) {
      sum += sample.spacings[used];
      ++used;
    }
    LlnPoint pt;
    pt.length = length;
    pt.spacings = used;
    if (used > 0) {
      pt.running_mean = sum / static_cast<double>(used);
      pt.band = 3.0 * spacing_mean_standard_error(used);
      pt.within_band = std::abs(pt.running_mean - closed_form_mean()) <= pt.band;
    }
    trace.push_back(pt);
  }
  return trace;
}

double chi_square_pvalue(double statistic, std::uint32_t df) {
  if (df == 0) throw std::invalid_argument("chi-square needs df >= 1");
  if (!(statistic >= 0)) throw std::invalid_argument("chi-square statistic must be nonnegative");
  if (statistic == 0) return 1.0;
  return boost::math::gamma_q(0.5 * df, 0.5 * statistic);
}

TestReport iid_test(std::span<const double> xs, double alpha) {
  if (!(alpha > 0 && alpha < 1)) throw std::invalid_argument("alpha must lie in (0, 1)");
  if (xs.size() < 3) throw InsufficientData("need at least 3 observations");
  const SpacingSample sample = extract_extrema(xs);
  const std::size_t n = sample.spacings.size();
  if (n < kMinTestSpacings) {
    throw InsufficientData("need at least " + std::to_string(kMinTestSpacings) + " spacings, got " +
                           std::to_string(n));
  }

  constexpr std::uint32_t kTailStart = 7;
  std::vector<TestBin> bins;
  ExactRational head_mass = 0;
  for (std::uint32_t k = 1; k < kTailStart; ++k) {
    const ExactRational p = mu_marginal(k);
    head_mass += p;
    bins.push_back({std::to_string(k), 0, p.get_d() * static_cast<double>(n)});
  }
  bins.push_back({">=" + std::to_string(kTailStart), 0, ExactRational(1 - head_mass).get_d() * static_cast<double>(n)});
  for (std::uint32_t k : sample.spacings) ++bins[std::min(k, kTailStart) - 1].observed;

  while (bins.size() > 2 && bins.back().expected < 5.0) {
    TestBin tail = bins.back();
    bins.pop_back();
    TestBin& last = bins.back();
    last.observed += tail.observed;
    last.expected += tail.expected;
    last.label = ">=" + (last.label.starts_with(">=") ? last.label.substr(2) : last.label);
  }

  TestReport r;
  r.alpha = alpha;
  r.spacings = n;
  for (const TestBin& b : bins) r.statistic += (b.observed - b.expected) * (b.observed - b.expected) / b.expected;
  r.df = static_cast<std::uint32_t>(bins.size() - 1);
  r.p_value = chi_square_pvalue(r.statistic, r.df);
  r.bins = std::move(bins);

  double sum = 0.0;
  for (std::uint32_t k : sample.spacings) sum += k;
  r.mean = sum / static_cast<double>(n);
  r.mean_z = (r.mean - closed_form_mean()) / spacing_mean_standard_error(n);
  r.reject = r.p_value < alpha;
  return r;
}

nlohmann::json to_json(const TestReport& r) {
  nlohmann::json bins = nlohmann::json::array();
  for (const TestBin& b : r.bins) {
    bins.push_back({{"label", b.label}, {"observed", b.observed}, {"expected", b.expected}});
  }
  return {{"statistic", r.statistic}, {"df", r.df},           {"p_value", r.p_value},
          {"bins", bins},             {"spacings", r.spacings}, {"mean", r.mean},
          {"mean_z", r.mean_z},       {"alpha", r.alpha},     {"decision", r.decision()}};
}

TestReport test_report_from_json(const nlohmann::json& j) {
  TestReport r;
  r.statistic = j.at("statistic").get<double>();
  r.df = j.at("df").get<std::uint32_t>();
  r.p_value = j.at("p_value").get<double>();
  for (const auto& b : j.at("bins")) {
    r.bins.push_back({b.at("label").get<std::string>(), b.at("observed").get<std::uint64_t>(),
                      b.at("expected").get<double>()});
  }
  r.spacings = j.value("spacings", std::size_t{0});
  r.mean = j.value("mean", 0.0);
  r.mean_z = j.at("mean_z").get<double>();
  r.alpha = j.value("alpha", 0.0);
  const auto decision = j.at("decision").get<std::string>();
  if (decision != "accept" && decision != "reject") throw std::invalid_argument("bad decision '" + decision + "'");
  r.reject = decision == "reject";
  return r;
}

std::vector<double> read_series(std::istream& in) {
  std::vector<double> xs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const char* begin = line.data() + first;
    const char* end = line.data() + last + 1;
    if (*begin == '+') ++begin;
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(begin, end, x);
    if (ec != std::errc{} || ptr != end || !std::isfinite(x)) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": not a number: '" + line + "'");
    }
    xs.push_back(x);
  }
  return xs;
}

}  // namespace runperm
