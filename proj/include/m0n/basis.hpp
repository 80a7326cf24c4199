#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "m0n/geom.hpp"

namespace m0n {

namespace detail {

inline void enumerate_monomials(const SystemPtr& sys, std::size_t i, int remaining,
                                Exponents& cur, std::vector<Exponents>& out) {
  if (i == sys->size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  int wi = sys->weight(i);
  for (int e = 0; e * wi <= remaining; ++e) {
    cur[i] = e;
    enumerate_monomials(sys, i + 1, remaining - e * wi, cur, out);
  }
  cur[i] = 0;
}

// All exponent vectors of homogeneous weight w, in canonical term order.
inline std::vector<Exponents> monomials_of_weight(const SystemPtr& sys, int w) {
  std::vector<Exponents> out;
  Exponents cur(sys->size(), 0);
  enumerate_monomials(sys, 0, w, cur, out);
  std::sort(out.begin(), out.end(), MonomialOrder{});
  return out;
}

// Fraction-free (Bareiss) elimination utilities for small exact systems.
inline Int bareiss_determinant(std::vector<std::vector<Int>> M) {
  const int n = static_cast<int>(M.size());
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (M[i][k] != 0) { piv = i; break; }
    if (piv < 0) return 0;
    if (piv != k) { std::swap(M[piv], M[k]); sign = -sign; }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        M[i][j] = CoeffTraits<Int>::divide(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
      M[i][k] = 0;
    }
    prev = M[k][k];
  }
  return sign < 0 ? Int(-M[n - 1][n - 1]) : M[n - 1][n - 1];
}

// Solve M x = rhs exactly for a square integer matrix; the intermediate
// elimination stays integral, the back-substitution is rational.
inline std::vector<Rat> solve_integer_system(std::vector<std::vector<Int>> M,
                                             const std::vector<Int>& rhs) {
  const int n = static_cast<int>(M.size());
  for (int i = 0; i < n; ++i) M[i].push_back(rhs[i]);
  Int prev = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (M[i][k] != 0) { piv = i; break; }
    if (piv < 0) fail(ErrorCode::SingularBasis, "change-of-basis matrix is singular");
    if (piv != k) std::swap(M[piv], M[k]);
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j <= n; ++j)
        M[i][j] = CoeffTraits<Int>::divide(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
      M[i][k] = 0;
    }
    prev = M[k][k];
  }
  std::vector<Rat> x(n, Rat(0));
  for (int i = n - 1; i >= 0; --i) {
    Rat acc(M[i][n]);
    for (int j = i + 1; j < n; ++j) acc -= Rat(M[i][j]) * x[j];
    x[i] = acc / Rat(M[i][i]);
  }
  return x;
}

// The weight-w change of basis between u-monomials and products of
// projective-space classes: column c of `M` is the expansion of
// prod_i [P^i]^{e_i} (p-monomial c) over the u-monomials (rows).
struct BasisSlice {
  std::vector<Exponents> u_monos;
  std::vector<Exponents> p_monos;
  std::vector<std::vector<Int>> M;
  Int det;
};

inline const BasisSlice& basis_slice(int w) {
  static const std::vector<BasisSlice> cache = [] {
    std::vector<BasisSlice> out;
    for (int w = 0; w <= 5; ++w) {
      BasisSlice B;
      B.u_monos = monomials_of_weight(GeneratorSystem::lazard(), w);
      B.p_monos = monomials_of_weight(GeneratorSystem::pbasis(), w);
      std::vector<PolyZ> columns;
      for (const Exponents& e : B.p_monos) {
        PolyZ prod = PolyZ::one(GeneratorSystem::lazard());
        for (std::size_t i = 0; i < e.size(); ++i)
          if (e[i] > 0) prod *= pclass_any(static_cast<int>(i) + 1).pow(e[i]);
        columns.push_back(std::move(prod));
      }
      for (const Exponents& row : B.u_monos) {
        std::vector<Int> entries;
        for (const PolyZ& col : columns) entries.push_back(col.coefficient(row));
        B.M.push_back(std::move(entries));
      }
      B.det = bareiss_determinant(B.M);
      if (B.det == 0) fail(ErrorCode::SingularBasis, "projective classes fail to span weight " +
                                                         std::to_string(w));
      out.push_back(std::move(B));
    }
    return out;
  }();
  return cache.at(w);
}

}  // namespace detail

// Canonical list of p-monomials of weight w (exponent vectors over p1..p5).
inline std::vector<Exponents> p_monomials(int w) {
  if (w < 0) fail(ErrorCode::InvalidInput, "negative weight");
  if (w > 5) fail(ErrorCode::UnknownCoefficients, "p-monomials are complete through weight 5");
  return detail::basis_slice(w).p_monos;
}

// Determinant of the weight-w change-of-basis matrix (never zero).
inline Int basis_determinant(int w) {
  if (w < 0) fail(ErrorCode::InvalidInput, "negative weight");
  if (w > 5) fail(ErrorCode::UnknownCoefficients, "basis matrices stop at weight 5");
  return detail::basis_slice(w).det;
}

// Rewrite a homogeneous value over u1..u5 as a rational combination of
// products of projective-space classes p1..p5.
inline PolyQ to_projective_basis(const PolyQ& value) {
  require_same_system(value.system(), GeneratorSystem::lazard());
  auto pb = GeneratorSystem::pbasis();
  if (value.is_zero()) return PolyQ::zero(pb);
  int w = value.weight_of();  // rejects mixed-weight input
  if (w > 5) fail(ErrorCode::UnknownCoefficients, "value is outside the complete weight window");
  const auto& B = detail::basis_slice(w);

  // Clear denominators so the elimination stays over the integers.
  Int D = 1;
  for (const Exponents& row : B.u_monos)
    D = boost::multiprecision::lcm(D, denominator(value.coefficient(row)));
  std::vector<Int> rhs;
  for (const Exponents& row : B.u_monos) {
    Rat scaled = value.coefficient(row) * Rat(D);
    rhs.push_back(numerator(scaled));
  }

  std::vector<Rat> x = detail::solve_integer_system(B.M, rhs);
  PolyQ result = PolyQ::zero(pb);
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (x[c] == 0) continue;
    result += PolyQ::monomial(pb, B.p_monos[c], x[c] / Rat(D));
  }
  return result;
}

inline PolyQ to_projective_basis(const PolyZ& value) {
  return to_projective_basis(to_rational(value));
}

// Expand a combination of p-monomials back over u1..u5.
inline PolyQ from_projective_basis(const PolyQ& combo) {
  require_same_system(combo.system(), GeneratorSystem::pbasis());
  if (!combo.is_zero() && combo.max_term_weight() > 5)
    fail(ErrorCode::UnknownCoefficients, "combination reaches outside the complete weight window");
  PolyQ out = PolyQ::zero(GeneratorSystem::lazard());
  for (const auto& [e, coeff] : combo.terms()) {
    PolyQ prod = PolyQ::constant(GeneratorSystem::lazard(), coeff);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) prod *= to_rational(detail::pclass_any(static_cast<int>(i) + 1)).pow(e[i]);
    out += prod;
  }
  return out;
}

}  // namespace m0n
