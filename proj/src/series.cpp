#include "runperm/series.hpp"

#include <numeric>
#include <stdexcept>

namespace runperm {
namespace {

std::uint32_t degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), std::uint32_t{0}); }

void require_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.num_vars() != b.num_vars() || a.max_degree() != b.max_degree()) {
    throw std::invalid_argument("series dimension mismatch");
  }
}

// Appends every exponent vector of exactly total degree `remaining` over
// variables [var, n).
void fill_degree(std::uint32_t var, std::uint32_t remaining, Exponents& current, std::vector<Exponents>& out) {
  if (var + 1 == current.size()) {
    current[var] = remaining;
    out.push_back(current);
    return;
  }
  for (std::uint32_t k = remaining + 1; k-- > 0;) {
    current[var] = k;
    fill_degree(var + 1, remaining - k, current, out);
  }
  current[var] = 0;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::uint32_t num_vars, std::uint32_t max_degree)
    : num_vars_(num_vars), max_degree_(max_degree) {
  if (num_vars == 0) throw std::invalid_argument("series needs at least one variable");
}

TruncatedSeries TruncatedSeries::constant(std::uint32_t num_vars, std::uint32_t max_degree, const ExactRational& c) {
  TruncatedSeries s(num_vars, max_degree);
  s.set(Exponents(num_vars, 0), c);
  return s;
}

TruncatedSeries TruncatedSeries::linear(std::uint32_t num_vars, std::uint32_t max_degree, const ExactRational& c0,
                                        const std::vector<ExactRational>& c) {
  if (c.size() != num_vars) throw std::invalid_argument("linear form needs one coefficient per variable");
  TruncatedSeries s = constant(num_vars, max_degree, c0);
  for (std::uint32_t i = 0; i < num_vars; ++i) {
    Exponents e(num_vars, 0);
    e[i] = 1;
    s.set(e, c[i]);
  }
  return s;
}

ExactRational TruncatedSeries::coefficient(const Exponents& e) const {
  if (auto it = terms_.find(e); it != terms_.end()) return it->second;
  return 0;
}

void TruncatedSeries::set(const Exponents& e, const ExactRational& value) {
  if (e.size() != num_vars_) throw std::invalid_argument("exponent vector has wrong arity");
  if (degree(e) > max_degree_) return;
  if (value == 0) {
    terms_.erase(e);
  } else {
    terms_[e] = value;
  }
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_compatible(a, b);
  TruncatedSeries out = a;
  for (const auto& [e, c] : b.terms_) out.set(e, out.coefficient(e) + c);
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_compatible(a, b);
  TruncatedSeries out = a;
  for (const auto& [e, c] : b.terms_) out.set(e, out.coefficient(e) - c);
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_compatible(a, b);
  std::map<Exponents, ExactRational> acc;
  Exponents e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    const std::uint32_t da = degree(ea);
    for (const auto& [eb, cb] : b.terms_) {
      if (da + degree(eb) > a.max_degree_) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      acc[e] += ca * cb;
    }
  }
  TruncatedSeries out(a.num_vars_, a.max_degree_);
  for (const auto& [exps, c] : acc) out.set(exps, c);
  return out;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

std::vector<Exponents> monomials_up_to(std::uint32_t num_vars, std::uint32_t max_degree) {
  std::vector<Exponents> out;
  Exponents current(num_vars, 0);
  for (std::uint32_t d = 0; d <= max_degree; ++d) fill_degree(0, d, current, out);
  return out;
}

TruncatedSeries series_reciprocal(const TruncatedSeries& a) {
  const std::uint32_t n = a.num_vars();
  const ExactRational a0 = a.coefficient(Exponents(n, 0));
  if (a0 == 0) throw std::domain_error("series reciprocal needs a nonzero constant term");

  TruncatedSeries b(n, a.max_degree());
  Exponents rest(n);
  for (const Exponents& m : monomials_up_to(n, a.max_degree())) {
    if (degree(m) == 0) {
      b.set(m, 1 / a0);
      continue;
    }
    // Coefficient of x^m in a * b must vanish.
    ExactRational s = 0;
    for (const auto& [ea, ca] : a.terms()) {
      if (degree(ea) == 0) continue;
      bool divides = true;
      for (std::uint32_t i = 0; i < n; ++i) {
        if (ea[i] > m[i]) {
          divides = false;
          break;
        }
        rest[i] = m[i] - ea[i];
      }
      if (divides) s += ca * b.coefficient(rest);
    }
    b.set(m, -s / a0);
  }
  return b;
}

TruncatedSeries expand_generating_function(std::uint32_t n, std::uint32_t max_degree) {
  if (n < 1 || n > 4) throw std::invalid_argument("generating functions are available for n = 1..4 only");

  // 1 - Σ_{i in vars} x_i, with 1-based variable indices.
  auto one_minus = [&](std::initializer_list<std::uint32_t> vars) {
    std::vector<ExactRational> c(n, 0);
    for (std::uint32_t v : vars) c[v - 1] = -1;
    return TruncatedSeries::linear(n, max_degree, 1, c);
  };
  auto inv = [](const TruncatedSeries& s) { return series_reciprocal(s); };

  switch (n) {
    case 1:
      return inv(one_minus({1}));
    case 2:
      return inv(one_minus({1, 2}));
    case 3:
      return one_minus({1, 3}) * inv(one_minus({1})) * inv(one_minus({3})) * inv(one_minus({1, 2, 3}));
    default: {
      const TruncatedSeries first =
          one_minus({1}) * one_minus({1, 2, 4}) * inv(one_minus({1, 2})) * inv(one_minus({1, 4}));
      const TruncatedSeries second =
          one_minus({4}) * one_minus({1, 3, 4}) * inv(one_minus({1, 4})) * inv(one_minus({3, 4}));
      return inv(one_minus({1, 2, 3, 4})) * (first + second - TruncatedSeries::constant(n, max_degree, 1));
    }
  }
}

std::vector<SeriesMismatch> verify_generating_function(std::uint32_t n, std::uint32_t max_degree,
                                                       OmegaEngine& engine) {
  const TruncatedSeries f = expand_generating_function(n, max_degree);
  std::vector<SeriesMismatch> mismatches;
  for (const Exponents& m : monomials_up_to(n, max_degree)) {
    const ExactRational c = f.coefficient(m);
    const BigCount omega = engine.omega(RunPattern::alternating(m));
    if (c != ExactRational(omega)) mismatches.push_back({m, c, omega});
  }
  return mismatches;
}

}  // namespace runperm
