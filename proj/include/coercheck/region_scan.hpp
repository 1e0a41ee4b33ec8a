#pragma once

#include <atomic>
#include <cctype>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "coercheck/certify.hpp"
#include "coercheck/parse.hpp"
#include "coercheck/polynomial.hpp"
#include "coercheck/verdict.hpp"

namespace coercheck {

struct PlaceholderMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Inclusive parameter grid; `steps` values from min to max.
struct ParamRange {
  std::string name;
  Rational min;
  Rational max;
  std::size_t steps = 1;
};

/// Verdict grid over a two-parameter coefficient family, row-major in p1.
struct RegionScan {
  ParamRange p1, p2;
  std::vector<std::pair<Verdict, TheoremId>> cells;

  const std::pair<Verdict, TheoremId>& cell(std::size_t i, std::size_t j) const {
    return cells[i * p2.steps + j];
  }
};

inline Rational grid_value(const ParamRange& range, std::size_t index) {
  if (range.steps <= 1) return range.min;
  return range.min +
         Rational(long(index)) * (range.max - range.min) / Rational(long(range.steps - 1));
}

namespace detail {

inline bool is_uppercase_ident(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (std::isalpha(static_cast<unsigned char>(c)) && !std::isupper(static_cast<unsigned char>(c)))
      return false;
  return true;
}

/// Splits the template around identifier tokens so placeholders can be
/// swapped for numeric literals without touching anything else.
inline std::vector<std::pair<bool, std::string>> tokenize_identifiers(const std::string& text) {
  std::vector<std::pair<bool, std::string>> parts;  // (is_identifier, text)
  std::string current;
  auto flush = [&](bool ident) {
    if (!current.empty()) parts.emplace_back(ident, std::move(current));
    current.clear();
  };
  for (std::size_t i = 0; i < text.size();) {
    char c = text[i];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      flush(false);
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        current.push_back(text[i++]);
      flush(true);
    } else {
      current.push_back(c);
      ++i;
    }
  }
  flush(false);
  return parts;
}

}  // namespace detail

/// Replaces the two placeholder identifiers with exact rational literals.
/// The template must use exactly these two uppercase placeholders.
inline std::string substitute_placeholders(const std::string& text, const ParamRange& p1,
                                           const ParamRange& p2, const Rational& v1,
                                           const Rational& v2) {
  if (!detail::is_uppercase_ident(p1.name) || !detail::is_uppercase_ident(p2.name))
    throw PlaceholderMismatch("placeholder names must be uppercase identifiers");
  if (p1.name == p2.name) throw PlaceholderMismatch("placeholder names must differ");

  std::set<std::string> seen;
  std::string out;
  for (auto& [is_ident, part] : detail::tokenize_identifiers(text)) {
    if (is_ident && part == p1.name) {
      seen.insert(part);
      out += rational_to_string(v1);
    } else if (is_ident && part == p2.name) {
      seen.insert(part);
      out += rational_to_string(v2);
    } else {
      if (is_ident && detail::is_uppercase_ident(part))
        throw PlaceholderMismatch("unexpected placeholder '" + part + "'");
      out += part;
    }
  }
  if (!seen.contains(p1.name))
    throw PlaceholderMismatch("placeholder '" + p1.name + "' not used in the template");
  if (!seen.contains(p2.name))
    throw PlaceholderMismatch("placeholder '" + p2.name + "' not used in the template");
  return out;
}

/// Certifies every grid cell. Cells are independent; with jobs > 1 they are
/// computed concurrently and assembled in deterministic row-major order.
inline RegionScan run_region_scan(const std::string& text, ParamRange p1, ParamRange p2,
                                  const CertifyOptions& options = {}, std::size_t jobs = 1) {
  // Surface placeholder problems before spawning any work.
  substitute_placeholders(text, p1, p2, p1.min, p2.min);

  RegionScan scan;
  scan.p1 = std::move(p1);
  scan.p2 = std::move(p2);
  std::size_t total = scan.p1.steps * scan.p2.steps;
  scan.cells.assign(total, {Verdict::Unknown, TheoremId::None});

  auto worker_body = [&](std::size_t index) {
    std::size_t i = index / scan.p2.steps, j = index % scan.p2.steps;
    std::string cell_text =
        substitute_placeholders(text, scan.p1, scan.p2, grid_value(scan.p1, i),
                                grid_value(scan.p2, j));
    Certificate cert = certify(parse_polynomial(cell_text), options);
    scan.cells[index] = {cert.verdict, cert.theorem};
  };

  if (jobs <= 1) {
    for (std::size_t index = 0; index < total; ++index) worker_body(index);
    return scan;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < jobs; ++t)
    threads.emplace_back([&] {
      for (std::size_t index = next.fetch_add(1); index < total; index = next.fetch_add(1))
        worker_body(index);
    });
  for (auto& thread : threads) thread.join();
  return scan;
}

/// Stable CSV: header `p1,p2,verdict,theorem`, rows in row-major order,
/// grid values rendered as exact decimals where possible.
inline std::string region_scan_csv(const RegionScan& scan) {
  std::string out = "p1,p2,verdict,theorem\n";
  for (std::size_t i = 0; i < scan.p1.steps; ++i) {
    std::string v1 = format_rational(grid_value(scan.p1, i));
    for (std::size_t j = 0; j < scan.p2.steps; ++j) {
      const auto& [verdict, theorem] = scan.cell(i, j);
      out += v1 + "," + format_rational(grid_value(scan.p2, j)) + "," + to_string(verdict) + "," +
             to_string(theorem) + "\n";
    }
  }
  return out;
}

}  // namespace coercheck
