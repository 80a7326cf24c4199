#pragma once

#include <cctype>
#include <string>

#include "m0n/graded_polynomial.hpp"

namespace m0n {

// Parse "-4*u1^5 + 2*u1^3*u2 - 6*u5" style polynomial text over a generator
// system.  Accepted: integer (and for rational coefficients "p/q") constants,
// '*'-separated factors, '^' powers, arbitrary whitespace.  This is the
// inverse of the plain-text renderer and is used for embedded data tables.
template <class C>
GradedPolynomial<C> parse_polynomial(const SystemPtr& system, const std::string& text) {
  GradedPolynomial<C> result(system);
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto parse_uint = [&]() -> Int {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) fail(ErrorCode::InvalidInput, "expected digits at position " + std::to_string(start) + " in '" + text + "'");
    return Int(text.substr(start, i - start));
  };

  skip_ws();
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip_ws();
    } else if (!first) {
      fail(ErrorCode::InvalidInput, "expected '+' or '-' at position " + std::to_string(i) + " in '" + text + "'");
    }
    first = false;

    C coeff(sign);
    Exponents exps(system->size(), 0);
    bool expect_factor = true;
    while (expect_factor) {
      skip_ws();
      if (i >= text.size()) fail(ErrorCode::InvalidInput, "unexpected end of '" + text + "'");
      if (std::isdigit(static_cast<unsigned char>(text[i]))) {
        Int num = parse_uint();
        if (i < text.size() && text[i] == '/') {
          if constexpr (std::is_same_v<C, Rat>) {
            ++i;
            Int den = parse_uint();
            if (den == 0) fail(ErrorCode::InvalidInput, "zero denominator in '" + text + "'");
            coeff *= Rat(num, den);
          } else {
            fail(ErrorCode::InvalidInput, "fractional constant in integer context: '" + text + "'");
          }
        } else {
          coeff *= C(num);
        }
      } else if (std::isalpha(static_cast<unsigned char>(text[i]))) {
        std::size_t start = i;
        while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
        std::string symbol = text.substr(start, i - start);
        int idx = system->index_of(symbol);
        if (idx < 0) fail(ErrorCode::InvalidInput, "unknown symbol '" + symbol + "' in '" + text + "'");
        int e = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          e = static_cast<int>(parse_uint());
        }
        exps[idx] += e;
      } else {
        fail(ErrorCode::InvalidInput, std::string("unexpected character '") + text[i] + "' in '" + text + "'");
      }
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        expect_factor = true;
      } else {
        expect_factor = false;
      }
    }
    result.add_term(std::move(exps), std::move(coeff));
    skip_ws();
  }
  return result;
}

inline PolyZ parse_z(const SystemPtr& system, const std::string& text) {
  return parse_polynomial<Int>(system, text);
}

inline PolyQ parse_q(const SystemPtr& system, const std::string& text) {
  return parse_polynomial<Rat>(system, text);
}

}  // namespace m0n
