#include "runperm/exact.hpp"

#include <stdexcept>

namespace runperm {

BigCount factorial(std::uint64_t n) {
  BigCount out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigCount binomial(std::uint64_t n, std::uint64_t k) {
  BigCount out;
  if (k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

ExactRational make_rational(const BigCount& num, const BigCount& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const ExactRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigCount& z) { return z.get_str(); }

ExactRational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    BigCount z;
    if (s.empty() || z.set_str(s, 10) != 0) {
      throw std::invalid_argument("malformed rational: '" + text + "'");
    }
    return z;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return ExactRational(parse_int(text));
  return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

BigCount to_integer(const ExactRational& q) {
  if (q.get_den() != 1) throw std::domain_error("not an integer: " + to_string(q));
  return q.get_num();
}

double to_double(const ExactRational& q) { return q.get_d(); }

}  // namespace runperm
