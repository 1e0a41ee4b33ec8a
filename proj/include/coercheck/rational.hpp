#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace coercheck {

// Exact rational arithmetic. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as every entry point canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Exact conversion of a decimal literal ("2.5", ".25", "3.") to a rational.
inline Rational rational_from_decimal(std::string_view text) {
  auto dot = text.find('.');
  if (dot == std::string_view::npos) throw std::invalid_argument("not a decimal literal");
  std::string digits;
  digits.reserve(text.size());
  bool negative = false;
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::size_t frac_digits = 0;
  bool seen_dot = false, seen_digit = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("malformed decimal literal");
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else {
      throw std::invalid_argument("malformed decimal literal");
    }
  }
  if (!seen_digit) throw std::invalid_argument("malformed decimal literal");
  Integer num(digits.empty() ? "0" : digits, 10);
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(frac_digits));
  Rational q(num, den);
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

/// Parses "p", "-p/q" or a decimal literal.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  if (text.find('.') != std::string_view::npos) return rational_from_decimal(text);
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), std::string(text).c_str(), 10) != 0)
    throw std::invalid_argument("malformed rational literal");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
  q.canonicalize();
  return q;
}

/// Exact decimal rendering when the denominator is of the form 2^a 5^b.
inline std::optional<std::string> to_exact_decimal(const Rational& q) {
  Integer den = q.get_den();
  unsigned long twos = 0, fives = 0;
  while (mpz_even_p(den.get_mpz_t())) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return std::nullopt;
  unsigned long k = std::max(twos, fives);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, k);
  Integer scaled = q.get_num() * (scale / q.get_den());
  std::string s = scaled.get_str();
  if (k == 0) return s;
  bool neg = !s.empty() && s[0] == '-';
  std::string digits = neg ? s.substr(1) : s;
  if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
  digits.insert(digits.size() - k, ".");
  while (digits.back() == '0') digits.pop_back();
  if (digits.back() == '.') digits.pop_back();
  return (neg ? "-" : "") + digits;
}

/// "p/q" (or "p" for integers); the canonical exact wire format.
inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

/// Decimal when exact, fraction otherwise. Used for CSV cells and reports.
inline std::string format_rational(const Rational& q) {
  if (auto dec = to_exact_decimal(q)) return *dec;
  return q.get_str();
}

/// Correctly rounded (nearest) conversion; mpq_get_d would truncate.
inline double to_double_nearest(const Rational& q) {
  mpfr_t t;
  mpfr_init2(t, 64);
  mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDN);
  double d = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return d;
}

}  // namespace coercheck
