#include "runperm/classical.hpp"

#include <stdexcept>
#include <vector>

namespace runperm {

BigCount zigzag(std::uint32_t n, OmegaEngine& engine) {
  if (n == 0) throw std::invalid_argument("zigzag index must be >= 1");
  return engine.omega(RunPattern::alternating(std::vector<std::uint32_t>(n - 1, 1)));
}

BigCount euler_number(std::uint32_t index) {
  if (index % 2 == 1) return 0;
  // E_m = -Σ_{k=2,4,...,m} C(m, k) E_{m-k}
  std::vector<BigCount> e(index + 1, 0);
  e[0] = 1;
  for (std::uint32_t m = 2; m <= index; m += 2) {
    BigCount acc = 0;
    for (std::uint32_t k = 2; k <= m; k += 2) acc += binomial(m, k) * e[m - k];
    e[m] = -acc;
  }
  return e[index];
}

ExactRational bernoulli_number(std::uint32_t index) {
  std::vector<ExactRational> b(index + 1);
  b[0] = 1;
  for (std::uint32_t m = 1; m <= index; ++m) {
    ExactRational acc = 0;
    for (std::uint32_t k = 0; k < m; ++k) acc += ExactRational(binomial(m + 1, k)) * b[k];
    b[m] = -acc / ExactRational(m + 1);
  }
  return b[index];
}

IdentityReport verify_euler_identity(std::uint32_t n, OmegaEngine& engine) {
  if (n == 0) throw std::invalid_argument("identity index must be >= 1");
  IdentityReport r;
  r.identity = "b_{2n} = (-1)^n E_{2n}";
  r.n = n;
  r.lhs = ExactRational(zigzag(2 * n, engine));
  const BigCount e = euler_number(2 * n);
  r.rhs = ExactRational(n % 2 == 0 ? e : BigCount(-e));
  r.pass = r.lhs == r.rhs;
  return r;
}

IdentityReport verify_bernoulli_identity(std::uint32_t n, OmegaEngine& engine) {
  if (n == 0) throw std::invalid_argument("identity index must be >= 1");
  IdentityReport r;
  r.identity = "b_{2n-1} = (-1)^{n-1}/n 2^{2n-1} (2^{2n} - 1) B_{2n}";
  r.n = n;
  r.lhs = ExactRational(zigzag(2 * n - 1, engine));

  BigCount pow2 = 1;
  pow2 <<= 2 * n - 1;
  const BigCount factor = pow2 * (2 * pow2 - 1);
  ExactRational rhs = ExactRational(factor) * bernoulli_number(2 * n) / ExactRational(n);
  if (n % 2 == 0) rhs = -rhs;
  r.rhs = rhs;
  r.rhs_integral = rhs.get_den() == 1;
  r.pass = r.rhs_integral && r.lhs == r.rhs;
  return r;
}

}  // namespace runperm
