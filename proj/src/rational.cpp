#include "radixforge/rational.hpp"

#include <stdexcept>

namespace radixforge {

namespace {

bool is_integer_text(std::string_view text) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

BigInt parse_integer(std::string_view text) {
  if (!is_integer_text(text)) {
    throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
  }
  if (text[0] == '+') text.remove_prefix(1);
  return BigInt(std::string(text), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  const BigInt num = parse_integer(text.substr(0, slash));
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "': denominator must be unsigned");
  }
  const BigInt den = parse_integer(den_text);
  if (den == 0) {
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "': zero denominator");
  }
  Rational result(num, den);
  result.canonicalize();
  return result;
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

std::string to_decimal(const Rational& value, int places) {
  const bool negative = value < 0;
  const BigInt num = abs(value.get_num());
  const BigInt& den = value.get_den();
  BigInt whole = num / den;
  BigInt rem = num % den;
  std::string out = negative ? "-" : "";
  out += whole.get_str(10);
  if (places <= 0) return out;
  out += '.';
  for (int i = 0; i < places; ++i) {
    rem *= 10;
    const BigInt digit = rem / den;
    rem %= den;
    out += static_cast<char>('0' + digit.get_ui());
  }
  if (negative && out.find_first_not_of("-0.") == std::string::npos) {
    out.erase(0, 1);
  }
  return out;
}

BigInt ipow(std::uint64_t base, std::uint64_t exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), base, exponent);
  return result;
}

Rational inverse_power(std::uint64_t base, std::uint64_t exponent) {
  return Rational(BigInt(1), ipow(base, exponent));
}

BigInt factorial(std::uint64_t n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

}  // namespace radixforge
