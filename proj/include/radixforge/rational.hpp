#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace radixforge {

/// Arbitrary-precision integer.
using BigInt = mpz_class;

/// Exact fraction, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed
/// text or a zero denominator. The result is canonical.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// Decimal rendering truncated towards zero after `places` fractional digits.
/// Display only; never parsed back.
std::string to_decimal(const Rational& value, int places = 12);

/// s^e as an exact integer.
BigInt ipow(std::uint64_t base, std::uint64_t exponent);

/// 1/s^e.
Rational inverse_power(std::uint64_t base, std::uint64_t exponent);

BigInt factorial(std::uint64_t n);

}  // namespace radixforge
