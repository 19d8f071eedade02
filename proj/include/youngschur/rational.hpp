#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace youngschur {

using BigInt = mpz_class;
using ExactRational = mpq_class;

/// Parses "n", "-n", "n/d" or a finite decimal such as "0.1875". Result is canonical.
ExactRational parse_rational(std::string_view text);

/// "num/den" with den > 0, or just "num" when den == 1.
std::string to_string(const ExactRational& q);

/// Always "num/den", even for integers; this is the wire form.
std::string to_fraction_string(const ExactRational& q);

/// Decimal rendering with `digits` fractional digits, round-half-even.
std::string to_decimal(const ExactRational& q, int digits = 12);

double to_double(const ExactRational& q);

/// Exact square root when q is the square of a rational.
std::optional<ExactRational> rational_sqrt(const ExactRational& q);

BigInt factorial(unsigned n);
BigInt pow2(unsigned n);

inline ExactRational make_rational(long num, long den = 1) {
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace youngschur
