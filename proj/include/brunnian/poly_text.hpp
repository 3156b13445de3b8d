// Text form of polynomials.
//
// Grammar (input):   poly  := term ('+' term)*
//                    term  := coeff | coeff? '*'? 'x' ('^' nat)?
//                    coeff := nat
// The optional '*' between coefficient and 'x' is accepted on input and
// never printed. Canonical printing uses descending exponents, omits
// zero terms, and omits the coefficient 1 on nonconstant terms.
//
// Exponents that appear more than once are summed mod p and reported as
// warnings rather than rejected, so that published table rows with
// duplicated terms remain machine-checkable.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "brunnian/errors.hpp"
#include "brunnian/poly.hpp"

namespace brunnian {

struct ParsedPoly {
  Polynomial poly;
  std::vector<std::string> warnings;
};

namespace poly_text_detail {

constexpr std::size_t max_exponent = 1u << 20;

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace poly_text_detail

inline ParsedPoly parse_poly(std::string_view text, std::uint64_t p) {
  using poly_text_detail::is_digit;
  if (p < 2) throw domain_error("parse_poly: modulus must be >= 2");

  // Outer whitespace is tolerated; interior whitespace is not part of
  // the grammar and is reported as an error.
  std::size_t begin = 0, end = text.size();
  while (begin < end && (text[begin] == ' ' || text[begin] == '\t')) ++begin;
  while (end > begin && (text[end - 1] == ' ' || text[end - 1] == '\t')) --end;
  if (begin == end) throw parse_error("empty polynomial", begin);

  std::map<std::size_t, std::uint64_t> by_exp;
  std::vector<std::string> warnings;
  std::size_t i = begin;

  auto read_nat = [&](const char* what) {
    if (i >= end || !is_digit(text[i]))
      throw parse_error(std::string("expected ") + what, i);
    std::uint64_t value = 0;      // reduced mod p while accumulating
    std::uint64_t magnitude = 0;  // saturating, for overflow checks
    while (i < end && is_digit(text[i])) {
      const std::uint64_t d = static_cast<std::uint64_t>(text[i] - '0');
      value = (value * 10 + d) % p;
      if (magnitude <= poly_text_detail::max_exponent)
        magnitude = magnitude * 10 + d;
      ++i;
    }
    return std::pair<std::uint64_t, std::uint64_t>{value, magnitude};
  };

  while (true) {
    const std::size_t term_start = i;
    std::uint64_t coeff = 1;
    bool saw_coeff = false;
    if (i < end && is_digit(text[i])) {
      coeff = read_nat("coefficient").first;
      saw_coeff = true;
    }
    std::size_t exp = 0;
    bool saw_x = false;
    if (i < end && (text[i] == 'x' || text[i] == '*')) {
      if (text[i] == '*') {
        if (!saw_coeff) throw parse_error("'*' without coefficient", i);
        ++i;
        if (i >= end || text[i] != 'x') throw parse_error("expected 'x' after '*'", i);
      }
      ++i;  // consume 'x'
      saw_x = true;
      exp = 1;
      if (i < end && text[i] == '^') {
        ++i;
        const std::size_t exp_pos = i;
        auto [_, magnitude] = read_nat("exponent");
        if (magnitude > poly_text_detail::max_exponent)
          throw parse_error("exponent too large", exp_pos);
        exp = static_cast<std::size_t>(magnitude);
      }
    }
    if (!saw_coeff && !saw_x) throw parse_error("expected term", term_start);

    auto [it, inserted] = by_exp.emplace(exp, coeff);
    if (!inserted) {
      it->second = (it->second + coeff) % p;
      warnings.push_back("duplicate term for exponent " + std::to_string(exp) +
                         "; coefficients summed mod " + std::to_string(p));
    }

    if (i == end) break;
    if (text[i] != '+') throw parse_error("expected '+' or end of input", i);
    ++i;
  }

  std::vector<std::uint64_t> coeffs(by_exp.rbegin()->first + 1, 0);
  for (const auto& [exp, c] : by_exp) coeffs[exp] = c;
  return {Polynomial(std::move(coeffs), p), std::move(warnings)};
}

inline std::string to_text(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int e = f.degree(); e >= 0; --e) {
    const std::uint64_t c = f.coeff(static_cast<std::size_t>(e));
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (e == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c);
      out += 'x';
      if (e > 1) {
        out += '^';
        out += std::to_string(e);
      }
    }
  }
  return out;
}

}  // namespace brunnian
