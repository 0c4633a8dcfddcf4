#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace psatz {

/// Arbitrary-precision rational number. All kernel arithmetic is exact;
/// conversion to double happens only at the numerical boundary
/// (eigenvalue extraction, report output).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "a/b" or "a" (optionally signed). Throws std::invalid_argument
/// on malformed input or zero denominator.
Rational rational_from_string(const std::string& text);

/// Renders as "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

/// Exact dyadic rational equal to the given double. Throws for NaN/inf.
Rational rational_from_double(double x);

Integer binomial(unsigned long n, unsigned long k);

}  // namespace psatz
