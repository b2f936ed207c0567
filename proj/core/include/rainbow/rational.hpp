#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace rainbow {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "num/den" in lowest terms ("0/1" for zero).
std::string fraction_string(const Rational& q);

/// Decimal rendering rounded (half up) to at most `max_frac_digits`
/// fractional digits, trailing zeros trimmed ("1", "0.5", "0.333333333").
std::string decimal_string(const Rational& q, int max_frac_digits = 9);

/// num/den as a double for arbitrarily large operands; num == 0 yields 0.
/// Relative error is a few ulps (operands are truncated to their top 63
/// bits before the division).
double ratio_as_double(const BigInt& num, const BigInt& den);

}  // namespace rainbow
