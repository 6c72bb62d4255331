#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace runperm {

/// Arbitrary-precision nonnegative count (Ω values).
using BigCount = mpz_class;

/// Reduced arbitrary-precision fraction with positive denominator (Ω′ values, pmf values).
using ExactRational = mpq_class;

BigCount factorial(std::uint64_t n);
BigCount binomial(std::uint64_t n, std::uint64_t k);

/// Builds num/den and canonicalizes it.
ExactRational make_rational(const BigCount& num, const BigCount& den);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const ExactRational& q);
std::string to_string(const BigCount& z);

/// Parses the output of to_string back. Throws std::invalid_argument on malformed input.
ExactRational parse_rational(const std::string& text);

/// Exact integer value of q; throws std::domain_error when q is not an integer.
BigCount to_integer(const ExactRational& q);

double to_double(const ExactRational& q);

}  // namespace runperm
