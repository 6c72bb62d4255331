#pragma once

#include "runperm/exact.hpp"
#include "runperm/omega.hpp"
#include "runperm/pattern.hpp"

namespace runperm {

// Independent routes to Ω through the extremal-element decompositions.  The
// largest element of a matching permutation sits on a peak boundary and the
// smallest on a valley; removing it splits the pattern into two independent
// halves, giving in Ω' space
//
//   Ω'(p) = 1/(N+1)  Σ_{peaks b}   Ω'(left_b) Ω'(right_b)
//   Ω'(p) = 1/(N+1)  Σ_{valleys b} Ω'(left_b) Ω'(right_b)
//   Ω'(p) = 1/(2(N+1)) Σ_{all b}   Ω'(left_b) Ω'(right_b)
//
// where left_b drops the last run before b by one and right_b drops the first
// run after b by one.  A side with no elements contributes 1.  Each route
// recurses only into itself, and results are converted back to counts through
// (N+1)!; a non-integral result throws std::logic_error.

BigCount omega_via_max_split(const RunPattern& p);
BigCount omega_via_min_split(const RunPattern& p);
BigCount omega_via_bilateral(const RunPattern& p);

/// The bilateral sum with the right factor's first run incremented instead of
/// decremented, evaluated one level deep with exact Ω' factors.  Does not
/// equal Ω'(p) in general (for a single Up run of length 1 it gives 7/24
/// instead of 1/2); kept to document that discrepancy.
ExactRational bilateral_increment_variant(const RunPattern& p, OmegaEngine& engine);

}  // namespace runperm
