#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "m0n/truncated_series.hpp"

namespace m0n {

// Deterministic plain-text and LaTeX forms.  Polynomials print highest
// total degree first (the canonical term order); series print lowest
// variable degree first with parenthesized coefficient blocks.

namespace detail {

inline bool coeff_negative(const Int& c) { return c < 0; }
inline bool coeff_negative(const Rat& c) { return c < 0; }

template <class C>
C coeff_abs(const C& c) {
  return coeff_negative(c) ? C(-c) : c;
}

inline bool coeff_is_one(const Int& c) { return c == 1; }
inline bool coeff_is_one(const Rat& c) { return c == 1; }

// "u_1", "\beta", "p_2", "z_3"; plain single letters pass through.
inline std::string latex_symbol(const std::string& symbol) {
  if (symbol == "beta") return "\\beta";
  if (symbol.size() >= 2 && std::isalpha(static_cast<unsigned char>(symbol[0]))) {
    bool digits = true;
    for (std::size_t i = 1; i < symbol.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(symbol[i]))) digits = false;
    if (digits) {
      std::string sub = symbol.substr(1);
      return sub.size() == 1 ? symbol.substr(0, 1) + "_" + sub
                             : symbol.substr(0, 1) + "_{" + sub + "}";
    }
  }
  return symbol;
}

inline std::string latex_power(const std::string& base, int e) {
  if (e == 1) return base;
  return e < 10 ? base + "^" + std::to_string(e) : base + "^{" + std::to_string(e) + "}";
}

inline std::string latex_coeff(const Int& c) { return c.str(); }
inline std::string latex_coeff(const Rat& c) {
  if (denominator(c) == 1) return numerator(c).str();
  std::string n = numerator(c).str();
  bool neg = false;
  if (!n.empty() && n[0] == '-') { neg = true; n = n.substr(1); }
  return (neg ? "-\\frac{" : "\\frac{") + n + "}{" + denominator(c).str() + "}";
}

// One unsigned product like "4*u1^2*u3", "u3", or "4"; the caller adds signs.
template <class C>
std::string term_text(const C& magnitude, const Exponents& e, const GeneratorSystem& sys) {
  std::string vars;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!vars.empty()) vars += "*";
    vars += sys.symbol(i);
    if (e[i] > 1) vars += "^" + std::to_string(e[i]);
  }
  if (vars.empty()) return CoeffTraits<C>::to_string(magnitude);
  if (coeff_is_one(magnitude)) return vars;
  return CoeffTraits<C>::to_string(magnitude) + "*" + vars;
}

template <class C>
std::string term_latex(const C& magnitude, const Exponents& e, const GeneratorSystem& sys) {
  std::string vars;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    vars += latex_power(latex_symbol(sys.symbol(i)), e[i]);
  }
  if (vars.empty()) return latex_coeff(magnitude);
  if (coeff_is_one(magnitude)) return vars;
  return latex_coeff(magnitude) + vars;
}

}  // namespace detail

template <class C>
std::string to_text(const GradedPolynomial<C>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    bool neg = detail::coeff_negative(c);
    std::string body = detail::term_text(detail::coeff_abs(c), e, *p.system());
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    out += body;
  }
  return out;
}

template <class C>
std::string to_latex(const GradedPolynomial<C>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    bool neg = detail::coeff_negative(c);
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? "-" : "+";
    }
    out += detail::term_latex(detail::coeff_abs(c), e, *p.system());
  }
  return out;
}

// Series text: ascending variable degree; a multi-term coefficient is printed
// as "(...)*mono", a single-term one is folded into the product.
template <class C>
std::string to_text(const TruncatedSeries<C>& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  const auto& coeffs = s.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    const auto& [e, p] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (*s.variables())[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      std::string body = to_text(p);
      if (first) { out += body; first = false; }
      else if (!body.empty() && body[0] == '-') out += " - " + body.substr(1);
      else out += " + " + body;
      continue;
    }
    if (p.term_count() == 1) {
      const auto& [pe, pc] = *p.terms().begin();
      bool neg = detail::coeff_negative(pc);
      C mag = detail::coeff_abs(pc);
      std::string body;
      if (p.is_constant() && detail::coeff_is_one(mag)) body = mono;
      else body = detail::term_text(mag, pe, *p.system()) + "*" + mono;
      if (first) { out += (neg ? "-" : "") + body; first = false; }
      else out += (neg ? " - " : " + ") + body;
    } else {
      std::string body = "(" + to_text(p) + ")*" + mono;
      if (first) { out += body; first = false; }
      else out += " + " + body;
    }
  }
  return out;
}

// Tab-separated table: one header row, then one row per entry.
inline std::string to_tsv(const std::vector<std::string>& header,
                          const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  auto join = [&](const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) line += "\t";
      line += cells[i];
    }
    return line + "\n";
  };
  out += join(header);
  for (const auto& row : rows) out += join(row);
  return out;
}

}  // namespace m0n
