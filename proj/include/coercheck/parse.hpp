#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coercheck/polynomial.hpp"
#include "coercheck/rational.hpp"

namespace coercheck {

struct SyntaxError : std::runtime_error {
  SyntaxError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position(position) {}
  std::size_t position;
};

struct NegativeExponent : SyntaxError {
  explicit NegativeExponent(std::size_t position)
      : SyntaxError("negative exponent", position) {}
};

struct UnknownVariable : std::runtime_error {
  UnknownVariable(const std::string& name, std::size_t position)
      : std::runtime_error("unknown variable '" + name + "' at position " +
                           std::to_string(position)),
        name(name),
        position(position) {}
  std::string name;
  std::size_t position;
};

namespace detail {

// Grammar:
//   poly    := sign? term (sign term)* ;
//   term    := coeff ('*' factor)* | factor ('*' factor)* ;
//   coeff   := sign? (integer | integer '/' positive-integer | decimal) ;
//   factor  := ident ('^' positive-integer)? ;
//   ident   := letter (letter | digit | '_')* ;
// Whitespace is insignificant. Decimals convert exactly to rationals.
// Implicit multiplication ("2x") is rejected.
class PolyParser {
 public:
  PolyParser(std::string_view text, std::optional<std::vector<std::string>> vars)
      : text_(text), explicit_vars_(std::move(vars)) {
    if (explicit_vars_) {
      for (std::size_t i = 0; i < explicit_vars_->size(); ++i)
        var_index_[(*explicit_vars_)[i]] = i;
    }
  }

  Polynomial parse() {
    skip_ws();
    if (at_end()) throw SyntaxError("empty polynomial", pos_);
    parse_term(parse_optional_sign());
    while (!at_end()) {
      int sign = parse_required_sign();
      sign *= parse_optional_sign();
      parse_term(sign);
    }
    std::size_t n = explicit_vars_ ? explicit_vars_->size() : inferred_vars_.size();
    std::vector<std::string> names = explicit_vars_ ? *explicit_vars_ : inferred_vars_;
    std::vector<std::pair<Exponent, Rational>> terms;
    terms.reserve(raw_terms_.size());
    for (auto& [powers, coeff] : raw_terms_) {
      std::vector<int> e(n, 0);
      for (auto& [idx, p] : powers) e[idx] += p;
      terms.emplace_back(Exponent(std::move(e)), coeff);
    }
    return Polynomial::from_terms(n, std::move(terms), std::move(names));
  }

 private:
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  int parse_optional_sign() {
    skip_ws();
    if (peek() == '+') {
      ++pos_;
      return 1;
    }
    if (peek() == '-') {
      ++pos_;
      return -1;
    }
    return 1;
  }

  int parse_required_sign() {
    skip_ws();
    if (peek() == '+') {
      ++pos_;
      return 1;
    }
    if (peek() == '-') {
      ++pos_;
      return -1;
    }
    throw SyntaxError("expected '+' or '-'", pos_);
  }

  void parse_term(int sign) {
    skip_ws();
    Rational coeff(sign);
    std::map<std::size_t, int> powers;
    bool saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
      coeff *= parse_coeff();
    } else {
      parse_factor(powers);
      saw_factor = true;
    }
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      parse_factor(powers);
      saw_factor = true;
    }
    skip_ws();
    if (!at_end() && peek() != '+' && peek() != '-')
      throw SyntaxError(saw_factor ? "unexpected character" : "expected '*' before identifier",
                        pos_);
    raw_terms_.emplace_back(std::move(powers), std::move(coeff));
  }

  Rational parse_coeff() {
    skip_ws();
    std::size_t start = pos_;
    std::string intpart = read_digits();
    if (peek() == '.') {
      ++pos_;
      std::string fracpart = read_digits();
      if (intpart.empty() && fracpart.empty())
        throw SyntaxError("malformed decimal literal", start);
      return rational_from_decimal(intpart + "." + fracpart);
    }
    if (intpart.empty()) throw SyntaxError("expected number", start);
    Rational q(Integer(intpart, 10));
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      std::size_t den_pos = pos_;
      std::string den = read_digits();
      if (den.empty()) throw SyntaxError("expected denominator", den_pos);
      Integer d(den, 10);
      if (d == 0) throw SyntaxError("denominator must be positive", den_pos);
      q /= Rational(d);
    }
    return q;
  }

  void parse_factor(std::map<std::size_t, int>& powers) {
    skip_ws();
    std::size_t start = pos_;
    if (!std::isalpha(static_cast<unsigned char>(peek())))
      throw SyntaxError("expected identifier", pos_);
    std::string name;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        name.push_back(c);
        ++pos_;
      } else {
        break;
      }
    }
    int exponent = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t exp_pos = pos_;
      if (peek() == '-') throw NegativeExponent(exp_pos);
      std::string digits = read_digits();
      if (digits.empty()) throw SyntaxError("expected exponent", exp_pos);
      if (digits.size() > 9) throw SyntaxError("exponent too large", exp_pos);
      exponent = std::stoi(digits);
      if (exponent == 0) throw SyntaxError("exponent must be a positive integer", exp_pos);
    }
    powers[var_id(name, start)] += exponent;
  }

  std::size_t var_id(const std::string& name, std::size_t position) {
    auto it = var_index_.find(name);
    if (it != var_index_.end()) return it->second;
    if (explicit_vars_) throw UnknownVariable(name, position);
    inferred_vars_.push_back(name);
    return var_index_[name] = inferred_vars_.size() - 1;
  }

  std::string read_digits() {
    std::string s;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      s.push_back(text_[pos_]);
      ++pos_;
    }
    return s;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::optional<std::vector<std::string>> explicit_vars_;
  std::map<std::string, std::size_t> var_index_;
  std::vector<std::string> inferred_vars_;
  std::vector<std::pair<std::map<std::size_t, int>, Rational>> raw_terms_;
};

}  // namespace detail

/// Parses polynomial text. With a variable list, unknown identifiers are
/// rejected; without one, variables are collected in first-appearance order.
inline Polynomial parse_polynomial(std::string_view text,
                                   std::optional<std::vector<std::string>> var_names = {}) {
  return detail::PolyParser(text, std::move(var_names)).parse();
}

}  // namespace coercheck
