#include "runperm/extrema.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace runperm {
namespace {

// k^2 + 3k + 1 = Ω(1, k, 1)
BigCount marginal_numerator(std::uint32_t k) {
  const BigCount kk = k;
  return kk * kk + 3 * kk + 1;
}

constexpr std::uint32_t kMaxCutoff = 1000;

// Variance is always summed to this accuracy before being combined with
// other truncated sums.
constexpr double kVarianceTolerance = 1e-15;

struct CorrelationBound {
  double covariance_tail;
  double variance_tail;
};

// |E[mu0 mu1] - truncated| <= Σ_{k0>K or k1>K} k0 k1 P <= T2(K) + K^2 T0(K),
// from k0 k1 <= (k0^2 + k1^2)/2 and identical marginals.
double cross_moment_tail(std::uint32_t cutoff) {
  const double k = cutoff;
  return marginal_tail_bound(cutoff, 2) + k * k * marginal_tail_bound(cutoff, 0);
}

double correlation_error(double covariance_tail, double variance, double variance_tail, double covariance) {
  const double v_low = variance - variance_tail;
  return (covariance_tail + std::abs(covariance) * variance_tail / v_low) / v_low;
}

}  // namespace

ExactRational pattern_probability(const RunPattern& p, OmegaEngine& engine) { return engine.omega_prime(p); }

ExactRational maximum_point_probability(OmegaEngine& engine) {
  return pattern_probability(RunPattern::canonicalize({{Direction::Up, 1}, {Direction::Down, 1}}), engine);
}

ExactRational mu_marginal(std::uint32_t k) {
  if (k == 0) throw std::invalid_argument("extremum spacing must be >= 1");
  return make_rational(3 * marginal_numerator(k), factorial(k + 3));
}

ExactRational mu_marginal_via_omega(std::uint32_t k, OmegaEngine& engine) {
  return mu_joint({k}, engine);
}

ExactRational mu_joint(const std::vector<std::uint32_t>& spacings, OmegaEngine& engine) {
  if (spacings.empty()) throw std::invalid_argument("joint spacing law needs at least one spacing");
  std::vector<std::uint32_t> lengths;
  lengths.reserve(spacings.size() + 2);
  lengths.push_back(1);
  for (std::uint32_t k : spacings) {
    if (k == 0) throw std::invalid_argument("extremum spacing must be >= 1");
    lengths.push_back(k);
  }
  lengths.push_back(1);
  const ExactRational p = pattern_probability(RunPattern::alternating(lengths), engine);
  return p / maximum_point_probability(engine);
}

SpacingPmf spacing_pmf(std::uint32_t k_max) {
  SpacingPmf pmf;
  pmf.k_max = k_max;
  pmf.values.reserve(k_max);
  for (std::uint32_t k = 1; k <= k_max; ++k) pmf.values.push_back(mu_marginal(k));
  pmf.tail_bound = marginal_tail_bound(k_max, 0);
  return pmf;
}

double marginal_tail_bound(std::uint32_t cutoff, std::uint32_t power) {
  const std::uint32_t k = cutoff + 1;
  BigCount kp = 1;
  BigCount k1p = 1;
  for (std::uint32_t i = 0; i < power; ++i) {
    kp *= k;
    k1p *= k + 1;
  }
  const ExactRational first = ExactRational(kp) * mu_marginal(k);
  // t_{k+1} / t_k = ((k+1)/k)^power * q(k+1) / (q(k) (k+4)), decreasing in k.
  const ExactRational ratio =
      make_rational(k1p * marginal_numerator(k + 1), kp * marginal_numerator(k) * (k + 4));
  if (ratio >= 1) return std::numeric_limits<double>::infinity();
  const ExactRational bound = first / (1 - ratio);
  return bound.get_d();
}

std::uint32_t truncation_point(double tolerance, std::uint32_t power) {
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  for (std::uint32_t cutoff = 1; cutoff <= kMaxCutoff; ++cutoff) {
    if (marginal_tail_bound(cutoff, power) < tolerance) return cutoff;
  }
  throw std::invalid_argument("tolerance too small to certify");
}

MomentEstimate mu_mean(double tolerance) {
  MomentEstimate out;
  out.cutoff = truncation_point(tolerance, 1);
  out.partial_sum = 0;
  for (std::uint32_t k = 1; k <= out.cutoff; ++k) out.partial_sum += ExactRational(k) * mu_marginal(k);
  out.value = out.partial_sum.get_d();
  out.tail_bound = marginal_tail_bound(out.cutoff, 1);
  out.closed_form = closed_form_mean();
  return out;
}

MomentEstimate mu_variance(double tolerance) {
  MomentEstimate out;
  out.cutoff = truncation_point(tolerance, 2);
  out.partial_sum = 0;
  const ExactRational mean(3, 2);
  for (std::uint32_t k = 1; k <= out.cutoff; ++k) {
    const ExactRational d = ExactRational(k) - mean;
    out.partial_sum += d * d * mu_marginal(k);
  }
  out.value = out.partial_sum.get_d();
  // (k - 3/2)^2 <= k^2 for k >= 1
  out.tail_bound = marginal_tail_bound(out.cutoff, 2);
  out.closed_form = closed_form_variance();
  return out;
}

MomentEstimate mu_lag1_correlation_at(std::uint32_t cutoff, OmegaEngine& engine) {
  if (cutoff == 0) throw std::invalid_argument("cutoff must be >= 1");
  const MomentEstimate var = mu_variance(kVarianceTolerance);

  MomentEstimate out;
  out.cutoff = cutoff;
  out.partial_sum = 0;
  for (std::uint32_t k0 = 1; k0 <= cutoff; ++k0) {
    for (std::uint32_t k1 = 1; k1 <= cutoff; ++k1) {
      out.partial_sum += ExactRational(k0 * k1) * mu_joint({k0, k1}, engine);
    }
  }
  const ExactRational covariance = out.partial_sum - ExactRational(9, 4);
  out.value = ExactRational(covariance / var.partial_sum).get_d();
  out.tail_bound = correlation_error(cross_moment_tail(cutoff), var.value, var.tail_bound, covariance.get_d());
  out.closed_form = closed_form_lag1_correlation();
  return out;
}

MomentEstimate mu_lag1_correlation(double tolerance, OmegaEngine& engine) {
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  const MomentEstimate var = mu_variance(kVarianceTolerance);
  // |covariance| <= variance by Cauchy-Schwarz.
  for (std::uint32_t cutoff = 1; cutoff <= kMaxCutoff; ++cutoff) {
    if (correlation_error(cross_moment_tail(cutoff), var.value, var.tail_bound, var.value) < tolerance) {
      return mu_lag1_correlation_at(cutoff, engine);
    }
  }
  throw std::invalid_argument("tolerance too small to certify");
}

double closed_form_mean() { return 1.5; }

double closed_form_variance() { return 6.0 * std::numbers::e - 63.0 / 4.0; }

double closed_form_lag1_correlation() {
  constexpr double e = std::numbers::e;
  return (2.0 * e * e - 8.0 * e + 7.0) / (8.0 * e - 21.0);
}

}  // namespace runperm
