#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "runperm/exact.hpp"
#include "runperm/omega.hpp"

namespace runperm {

using Exponents = std::vector<std::uint32_t>;

/// Multivariate power series over exact rationals, truncated at total degree D.
/// Only nonzero coefficients are stored.
class TruncatedSeries {
 public:
  TruncatedSeries(std::uint32_t num_vars, std::uint32_t max_degree);

  static TruncatedSeries constant(std::uint32_t num_vars, std::uint32_t max_degree, const ExactRational& c);
  /// c0 + Σ_i c[i] x_{i+1}
  static TruncatedSeries linear(std::uint32_t num_vars, std::uint32_t max_degree, const ExactRational& c0,
                                const std::vector<ExactRational>& c);

  std::uint32_t num_vars() const { return num_vars_; }
  std::uint32_t max_degree() const { return max_degree_; }
  const std::map<Exponents, ExactRational>& terms() const { return terms_; }

  ExactRational coefficient(const Exponents& e) const;
  /// Sets a coefficient; terms of total degree above D are dropped.
  void set(const Exponents& e, const ExactRational& value);

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::uint32_t num_vars_;
  std::uint32_t max_degree_;
  std::map<Exponents, ExactRational> terms_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// b with a * b = 1 through degree D, solved degree by degree.  Throws
/// std::domain_error if a has zero constant term.
TruncatedSeries series_reciprocal(const TruncatedSeries& a);

/// All exponent vectors in num_vars variables of total degree <= max_degree,
/// ordered by total degree.
std::vector<Exponents> monomials_up_to(std::uint32_t num_vars, std::uint32_t max_degree);

/// Expands the ordinary generating function F_n = Σ Ω(i1, ..., in) x^i for
/// n in 1..4.  F1 = 1/(1 - x1) and F2 = 1/(1 - x1 - x2) follow from the
/// one- and two-run closed forms; F3 and F4 are the published rational
/// functions.  Throws std::invalid_argument for other n.
TruncatedSeries expand_generating_function(std::uint32_t n, std::uint32_t max_degree);

struct SeriesMismatch {
  Exponents exponents;
  ExactRational coefficient;
  BigCount omega;
};

/// Compares every coefficient of F_n through degree D with Ω of the
/// alternating pattern (i1, ..., in).  Empty when the expansion is correct.
std::vector<SeriesMismatch> verify_generating_function(std::uint32_t n, std::uint32_t max_degree,
                                                       OmegaEngine& engine);

}  // namespace runperm
