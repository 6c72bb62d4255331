#pragma once

#include <cstdint>
#include <vector>

#include "runperm/exact.hpp"
#include "runperm/omega.hpp"
#include "runperm/pattern.hpp"

namespace runperm {

// Law of the spacings (mu_t) between consecutive local extrema of an i.i.d.
// continuous sequence, conditioned on position 0 being a maximum point.
// A window X_{-1} < X_0 > ... realizing (Up 1, ...) has probability Ω'(...);
// dividing by P{0 is a maximum point} = Ω'(Up 1, Down 1) = 1/3 gives the
// factor 3 in every formula below.

/// Probability that an i.i.d. continuous window realizes p, i.e. Ω'(p).
ExactRational pattern_probability(const RunPattern& p, OmegaEngine& engine);

/// P{position 0 is a local maximum} = 1/3.
ExactRational maximum_point_probability(OmegaEngine& engine);

/// P{mu_0 = k} = 3 (k^2 + 3k + 1) / (k + 3)!.  Throws std::invalid_argument for k = 0.
ExactRational mu_marginal(std::uint32_t k);

/// The same probability computed as 3 Ω'(1, k, 1).
ExactRational mu_marginal_via_omega(std::uint32_t k, OmegaEngine& engine);

/// P{mu_0 = k0, ..., mu_n = kn} = 3 Ω'(1, k0, ..., kn, 1).  Throws
/// std::invalid_argument for an empty list or a zero spacing.
ExactRational mu_joint(const std::vector<std::uint32_t>& spacings, OmegaEngine& engine);

struct SpacingPmf {
  std::uint32_t k_max = 0;
  std::vector<ExactRational> values;  // values[k - 1] = P{mu_0 = k}
  double tail_bound = 0.0;            // >= P{mu_0 > k_max}
};

SpacingPmf spacing_pmf(std::uint32_t k_max);

/// Certified upper bound on Σ_{k > cutoff} k^power P{mu_0 = k}.  Successive
/// term ratios decrease in k, so the tail is dominated by a geometric series
/// started at k = cutoff + 1.
double marginal_tail_bound(std::uint32_t cutoff, std::uint32_t power);

/// Smallest cutoff >= 1 whose marginal_tail_bound falls below tolerance.
std::uint32_t truncation_point(double tolerance, std::uint32_t power);

struct MomentEstimate {
  double value = 0.0;
  ExactRational partial_sum;  // exact truncated sum behind `value`
  std::uint32_t cutoff = 0;
  double tail_bound = 0.0;    // |value - true moment| <= tail_bound (+ rounding)
  double closed_form = 0.0;
};

/// E mu_0; closed form 3/2.
MomentEstimate mu_mean(double tolerance);

/// Var mu_0 = E (mu_0 - 3/2)^2; closed form 6e - 63/4.
MomentEstimate mu_variance(double tolerance);

/// corr(mu_0, mu_1) from the truncated double sum of k0 k1 P{mu_0 = k0, mu_1 = k1};
/// closed form (2e^2 - 8e + 7) / (8e - 21).  partial_sum holds the truncated
/// E[mu_0 mu_1].
MomentEstimate mu_lag1_correlation(double tolerance, OmegaEngine& engine);

/// Same, truncated at an explicit cutoff for both indices.
MomentEstimate mu_lag1_correlation_at(std::uint32_t cutoff, OmegaEngine& engine);

double closed_form_mean();
double closed_form_variance();
double closed_form_lag1_correlation();

}  // namespace runperm
