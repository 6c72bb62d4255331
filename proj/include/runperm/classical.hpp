#pragma once

#include <cstdint>
#include <string>

#include "runperm/exact.hpp"
#include "runperm/omega.hpp"

namespace runperm {

/// b_n: Ω of the alternating pattern with n - 1 unit runs, i.e. the number of
/// up-down permutations of n elements.  Requires n >= 1.
BigCount zigzag(std::uint32_t n, OmegaEngine& engine);

/// E_{index}, coefficients of 1/cosh x = Σ E_n x^n / n!, from the convolution
/// cosh(x) * sech(x) = 1.  Zero for odd index.  Never touches Ω.
BigCount euler_number(std::uint32_t index);

/// B_{index}, coefficients of x/(e^x - 1) = Σ B_n x^n / n!, from
/// Σ_{k<=m} C(m+1, k) B_k = 0.  Never touches Ω.
ExactRational bernoulli_number(std::uint32_t index);

struct IdentityReport {
  std::string identity;
  std::uint32_t n = 0;
  ExactRational lhs;
  ExactRational rhs;
  bool rhs_integral = true;
  bool pass = false;
};

/// b_{2n} against (-1)^n E_{2n}.
IdentityReport verify_euler_identity(std::uint32_t n, OmegaEngine& engine);

/// b_{2n-1} against (-1)^{n-1} / n * 2^{2n-1} (2^{2n} - 1) B_{2n}.  A
/// non-integral right-hand side fails regardless of value.
IdentityReport verify_bernoulli_identity(std::uint32_t n, OmegaEngine& engine);

}  // namespace runperm
