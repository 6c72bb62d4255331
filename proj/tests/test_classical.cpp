#include <doctest.h>

#include "runperm/classical.hpp"
#include "runperm/oracle.hpp"
#include "support.hpp"

using namespace runperm;

namespace {

// Seidel boustrophedon triangle: row n ends (or starts) with the zigzag
// number A(n).  Independent of both Ω and the cosh convolution.
std::vector<BigCount> seidel_zigzag(std::size_t count) {
  std::vector<BigCount> out{1};
  std::vector<BigCount> row{1};
  for (std::size_t n = 1; n < count; ++n) {
    std::vector<BigCount> next(n + 1);
    if (n % 2 == 1) {
      next[0] = 0;
      for (std::size_t k = 1; k <= n; ++k) next[k] = next[k - 1] + row[k - 1];
      out.push_back(next[n]);
    } else {
      next[n] = 0;
      for (std::size_t k = n; k-- > 0;) next[k] = next[k + 1] + row[k];
      out.push_back(next[0]);
    }
    row = std::move(next);
  }
  return out;  // out[n] = A(n)
}

}  // namespace

TEST_CASE("zigzag numbers") {
  OmegaEngine engine;
  CHECK(zigzag(1, engine) == 1);
  CHECK(zigzag(4, engine) == 5);
  CHECK(zigzag(5, engine) == 16);
  CHECK_THROWS_AS(zigzag(0, engine), std::invalid_argument);

  const std::vector<int> table{1, 1, 2, 5, 16, 61, 272, 1385};
  for (std::uint32_t n = 1; n <= 8; ++n) {
    CHECK(zigzag(n, engine) == table[n - 1]);
    CHECK(zigzag(n, engine) == count_matching(runperm::testing::alt(std::vector<std::uint32_t>(n - 1, 1))));
  }
  // A(n) counts alternating permutations of n elements.
  const auto seidel = seidel_zigzag(23);
  for (std::uint32_t n = 1; n < 23; ++n) CHECK(zigzag(n, engine) == seidel[n]);
}

TEST_CASE("Euler numbers") {
  CHECK(euler_number(0) == 1);
  CHECK(euler_number(2) == -1);
  CHECK(euler_number(4) == 5);
  CHECK(euler_number(6) == -61);
  CHECK(euler_number(8) == 1385);
  CHECK(euler_number(5) == 0);
  const auto seidel = seidel_zigzag(41);
  for (std::uint32_t m = 0; m <= 40; m += 2) {
    const BigCount magnitude = seidel[m];
    CHECK(euler_number(m) == ((m / 2) % 2 == 0 ? magnitude : BigCount(-magnitude)));
  }
}

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli_number(0) == 1);
  CHECK(bernoulli_number(1) == ExactRational(-1, 2));
  CHECK(bernoulli_number(2) == ExactRational(1, 6));
  CHECK(bernoulli_number(4) == ExactRational(-1, 30));
  CHECK(bernoulli_number(6) == ExactRational(1, 42));
  CHECK(bernoulli_number(12) == ExactRational(-691, 2730));
  for (std::uint32_t m = 3; m <= 21; m += 2) CHECK(bernoulli_number(m) == 0);
}

TEST_CASE("classical identities") {
  OmegaEngine engine;
  auto e1 = verify_euler_identity(1, engine);
  CHECK(e1.pass);
  CHECK(e1.lhs == 1);
  auto e3 = verify_euler_identity(3, engine);
  CHECK(e3.pass);
  CHECK(e3.lhs == 61);

  auto b1 = verify_bernoulli_identity(1, engine);
  CHECK(b1.pass);
  CHECK(b1.rhs == 1);
  CHECK(verify_bernoulli_identity(2, engine).rhs == 2);
  CHECK(verify_bernoulli_identity(3, engine).rhs == 16);

  for (std::uint32_t n = 1; n <= 12; ++n) {
    CHECK(verify_euler_identity(n, engine).pass);
    const auto r = verify_bernoulli_identity(n, engine);
    CHECK(r.rhs_integral);
    CHECK(r.pass);
  }
}
