#include "radixforge/digit_word.hpp"

#include <map>
#include <stdexcept>

namespace radixforge {

namespace {

void check_digits(const std::vector<Digit>& digits, int base) {
  for (const Digit d : digits) {
    if (d < 0 || d >= base) {
      throw std::invalid_argument("digit " + std::to_string(d) +
                                  " out of alphabet for base " +
                                  std::to_string(base));
    }
  }
}

// Base-s integer spelled by `digits`, most significant first.
BigInt read_integer(const std::vector<Digit>& digits, int base) {
  BigInt value = 0;
  for (const Digit d : digits) value = value * base + d;
  return value;
}

void append_digits(std::string& out, const std::vector<Digit>& digits, int base) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (base > 10 && i > 0) out += ',';
    out += std::to_string(digits[i]);
  }
}

std::vector<Digit> parse_digit_list(std::string_view text, bool comma_separated) {
  std::vector<Digit> digits;
  if (text.empty()) return digits;
  if (!comma_separated) {
    for (const char c : text) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("malformed digit '" + std::string(1, c) + "'");
      }
      digits.push_back(c - '0');
    }
    return digits;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto item = text.substr(start, comma == std::string_view::npos
                                             ? std::string_view::npos
                                             : comma - start);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string_view::npos ||
        item.size() > 9) {
      throw std::invalid_argument("malformed digit '" + std::string(item) + "'");
    }
    digits.push_back(std::stoi(std::string(item)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return digits;
}

}  // namespace

DigitWord::DigitWord(int base, std::vector<Digit> pre, std::vector<Digit> per)
    : DigitWord(base, EventuallyPeriodic<Digit>{std::move(pre), std::move(per)}) {}

DigitWord::DigitWord(int base, EventuallyPeriodic<Digit> digits)
    : base_(base), digits_(std::move(digits)) {
  if (base_ < 2) throw std::invalid_argument("base must be >= 2");
  if (digits_.per.empty()) throw std::invalid_argument("period must be nonempty");
  check_digits(digits_.pre, base_);
  check_digits(digits_.per, base_);
}

DigitWord DigitWord::minimized() const { return DigitWord(base_, digits_.minimized()); }

std::string DigitWord::str() const {
  std::string out = std::to_string(base_) + ":";
  append_digits(out, digits_.pre, base_);
  out += '(';
  append_digits(out, digits_.per, base_);
  out += ')';
  return out;
}

DigitWord parse_word(std::string_view text) {
  const auto colon = text.find(':');
  const auto open = text.find('(');
  if (colon == std::string_view::npos || open == std::string_view::npos ||
      open < colon || text.empty() || text.back() != ')') {
    throw std::invalid_argument("malformed word '" + std::string(text) +
                                "': expected base:pre(per)");
  }
  const auto base_text = text.substr(0, colon);
  if (base_text.empty() || base_text.size() > 9 ||
      base_text.find_first_not_of("0123456789") != std::string_view::npos) {
    throw std::invalid_argument("malformed word '" + std::string(text) + "': bad base");
  }
  const int base = std::stoi(std::string(base_text));
  const bool commas = base > 10;
  auto pre = parse_digit_list(text.substr(colon + 1, open - colon - 1), commas);
  auto per = parse_digit_list(text.substr(open + 1, text.size() - open - 2), commas);
  return DigitWord(base, std::move(pre), std::move(per));
}

DigitWord expand(const Rational& x, int base) {
  if (base < 2) throw std::invalid_argument("base must be >= 2");
  if (x < 0 || x > 1) throw std::invalid_argument("x must lie in [0,1]");
  if (x == 1) return DigitWord(base, {}, {base - 1});

  const BigInt& den = x.get_den();
  BigInt rem = x.get_num();
  std::vector<Digit> digits;
  std::map<BigInt, std::size_t> seen;
  // Remainders live in {0, ..., den-1}, so a repeat is guaranteed.
  while (seen.find(rem) == seen.end()) {
    seen.emplace(rem, digits.size());
    rem *= base;
    const BigInt digit = rem / den;
    rem -= digit * den;
    digits.push_back(static_cast<Digit>(digit.get_si()));
  }
  const std::size_t start = seen.at(rem);
  std::vector<Digit> pre(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(start));
  std::vector<Digit> per(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end());
  return DigitWord(base, std::move(pre), std::move(per));
}

Rational evaluate(const DigitWord& word) {
  const int s = word.base();
  const BigInt head = read_integer(word.pre(), s);
  const BigInt cycle = read_integer(word.per(), s);
  const BigInt cycle_den = ipow(s, word.per().size()) - 1;
  Rational value = Rational(head) + Rational(cycle, cycle_den);
  value /= Rational(ipow(s, word.pre().size()));
  value.canonicalize();
  return value;
}

DigitWord canonicalize(const DigitWord& word) { return expand(evaluate(word), word.base()); }

std::optional<DigitWord> dual_form(const DigitWord& word) {
  const int s = word.base();
  const DigitWord canonical = canonicalize(word);
  if (canonical.per() != std::vector<Digit>{0} || canonical.pre().empty()) {
    return std::nullopt;
  }
  std::vector<Digit> pre = canonical.pre();
  pre.back() -= 1;
  DigitWord tailed(s, std::move(pre), {s - 1});
  if (word.minimized() == canonical) return tailed;
  return canonical;
}

bool is_s_adic_rational(const Rational& x, int base) {
  if (x <= 0 || x >= 1) return false;
  BigInt den = x.get_den();
  // den must divide a power of s: strip common factors.
  BigInt g;
  const BigInt s(base);
  while (true) {
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), s.get_mpz_t());
    if (g == 1) break;
    den /= g;
  }
  return den == 1;
}

}  // namespace radixforge
