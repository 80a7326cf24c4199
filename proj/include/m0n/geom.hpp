#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "m0n/fgl.hpp"

namespace m0n {

namespace detail {
// [P^m] for 0 <= m <= 5 with [P^0] = 1; shared backend for the public op and
// the pushforward rule.
inline PolyZ pclass_any(int m);
}  // namespace detail

// ---------------------------------------------------------------------------
// The truncated hyperplane-class calculus of a projective space P^m:
// elements are polynomials in one nilpotent variable x with x^{m+1} = 0,
// integration is the pushforward rule  integral of x^k = [P^{m-k}].
// ---------------------------------------------------------------------------
class ProjectiveSpaceRing {
 public:
  explicit ProjectiveSpaceRing(int m) : m_(m) {
    if (m < 0 || m > 5)
      fail(m > 5 ? ErrorCode::UnknownCoefficients : ErrorCode::InvalidInput,
           "projective base dimension must lie in 0..5");
  }

  int dim() const { return m_; }

  SeriesZ zero() const {
    return SeriesZ::zero(GeneratorSystem::lazard(), vars_x(), m_, 5);
  }

  SeriesZ one() const {
    return SeriesZ::from_polynomial(PolyZ::one(GeneratorSystem::lazard()), vars_x(), m_, 5);
  }

  SeriesZ hyperplane() const {
    if (m_ == 0) return zero();  // x is already 0 on a point
    return SeriesZ::variable(GeneratorSystem::lazard(), vars_x(), "x", m_, 5);
  }

  // integral over P^m: sum_k f_k [P^{m-k}].
  PolyZ integrate(const SeriesZ& f) const {
    require_same_vars(f.variables(), vars_x());
    PolyZ result = PolyZ::zero(GeneratorSystem::lazard());
    for (int k = 0; k <= std::min(m_, f.order()); ++k)
      result += f.coefficient_at(k) * detail::pclass_any(m_ - k);
    return result;
  }

 private:
  int m_;
};

// ---------------------------------------------------------------------------
// Projective-space classes from the logarithm: [P^m] = (m+1) * (coefficient
// of x^{m+1} in the logarithm of the universal law).  The rational
// intermediate must clear its denominators.
// ---------------------------------------------------------------------------
inline PolyZ projective_space_class(int m) {
  if (m < 1 || m > 5)
    fail(m > 5 ? ErrorCode::UnknownCoefficients : ErrorCode::InvalidInput,
         "projective space classes are available for dimensions 1..5");
  return detail::pclass_any(m);
}

namespace detail {
inline PolyZ pclass_any(int m) {
  static const std::vector<PolyZ> table = [] {
    SeriesQ l = log_series(universal_law());
    std::vector<PolyZ> out;
    out.push_back(PolyZ::one(GeneratorSystem::lazard()));  // [P^0] = 1
    for (int k = 1; k <= 5; ++k) out.push_back(to_integer(l.coefficient_at(k + 1) * Rat(k + 1)));
    return out;
  }();
  if (m < 0 || m > 5) fail(ErrorCode::UnknownCoefficients, "no class for P^" + std::to_string(m));
  return table[m];
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Quillen's pushforward along a projective bundle P(L_1 + ... + L_r) -> base:
//
//   pi_*(f(xi)) = sum_i f(chi(lambda_i)) / prod_{j != i} F(lambda_j, chi(lambda_i))
//
// computed symbolically: with formal roots z_1..z_r each denominator factor
// splits as (z_j - z_i) * unit; inverting the units and clearing the
// Vandermonde product by one exact division turns the sum into an honest
// power series, into which the actual (nilpotent) root values are substituted.
//
// `roots` are elements of the base ring; `f` is given by its coefficient list
// (f = sum_k f_coeffs[k] * xi^k, default 1).  Returns pi_*(f) as a base
// element; integrate over the base to get a class.
// ---------------------------------------------------------------------------
inline SeriesZ quillen_pushforward(const ProjectiveSpaceRing& base,
                                   const std::vector<SeriesZ>& roots,
                                   const std::vector<SeriesZ>& f_coeffs = {}) {
  const int r = static_cast<int>(roots.size());
  if (r < 1) fail(ErrorCode::InvalidInput, "a projective bundle needs at least one root");
  auto sys = GeneratorSystem::lazard();
  for (const auto& root : roots) {
    require_same_system(root.system(), sys);
    require_same_vars(root.variables(), vars_x());
    if (!root.constant_term().is_zero())
      fail(ErrorCode::NonNilpotentRoot, "root has a nonzero constant term");
  }
  const int m = base.dim();
  const int vandermonde_degree = r * (r - 1) / 2;
  const int N = m + vandermonde_degree + 1;

  Variables names{"x"};
  for (int i = 1; i <= r; ++i) names.push_back("z" + std::to_string(i));
  VarsPtr vars = make_vars(std::move(names));

  const BundleZ& bundle = universal_bundle();
  SeriesZ F = bundle.law.F.extended_to(N);      // complete: cap empties degrees > 6
  SeriesZ chi = bundle.chi.extended_to(N);
  auto zvar = [&](int i) { return SeriesZ::variable(sys, vars, "z" + std::to_string(i + 1), N, 5); };
  SeriesZ xbig = SeriesZ::variable(sys, vars, "x", N, 5);
  SeriesZ unit_big = SeriesZ::from_polynomial(PolyZ::one(sys), vars, N, 5);

  // f embedded into the big variable space.
  std::vector<SeriesZ> f_big;
  if (f_coeffs.empty()) {
    f_big.push_back(unit_big);
  } else {
    for (const auto& fk : f_coeffs) {
      require_same_vars(fk.variables(), vars_x());
      f_big.push_back(fk.extended_to(N).compose({{"x", xbig}}));
    }
  }

  std::vector<SeriesZ> z;
  std::vector<SeriesZ> chi_z;
  for (int i = 0; i < r; ++i) {
    z.push_back(zvar(i));
    chi_z.push_back(chi.compose({{"x", z[i]}}));
  }

  SeriesZ numerator = SeriesZ::zero(sys, vars, N - 1, 5);
  for (int i = 0; i < r; ++i) {
    // f(chi(z_i))
    SeriesZ term = SeriesZ::zero(sys, vars, N, 5);
    SeriesZ chipow = unit_big;
    for (std::size_t k = 0; k < f_big.size(); ++k) {
      term += f_big[k] * chipow;
      if (k + 1 < f_big.size()) chipow *= chi_z[i];
    }
    // Strip the unit factors of the denominators: F(z_j, chi(z_i)) =
    // (z_j - z_i) * U_ji with U_ji invertible.
    for (int j = 0; j < r; ++j) {
      if (j == i) continue;
      SeriesZ D = F.compose({{"x", z[j]}, {"y", chi_z[i]}});
      SeriesZ U = D.exact_divide(z[j] - z[i]);
      term *= U.invert_unit();
    }
    // Complementary Vandermonde factor and the sign from reordering
    // prod_{j != i}(z_j - z_i) against prod_{j<k}(z_j - z_k).
    for (int j = 0; j < r; ++j)
      for (int k = j + 1; k < r; ++k) {
        if (j == i || k == i) continue;
        term *= z[j] - z[k];
      }
    if ((r - 1 - i) % 2 != 0) term = -term;
    numerator += term;
  }

  SeriesZ result = numerator;
  if (r >= 2) {
    SeriesZ W = unit_big;
    for (int j = 0; j < r; ++j)
      for (int k = j + 1; k < r; ++k) W *= z[j] - z[k];
    result = numerator.exact_divide(W);
  }

  // Substitute the actual roots.
  std::map<std::string, SeriesZ> images;
  images.emplace("x", SeriesZ::variable(sys, vars_x(), "x", m, 5));
  for (int i = 0; i < r; ++i) images.emplace("z" + std::to_string(i + 1), roots[i]);
  return result.compose(images);
}

// ---------------------------------------------------------------------------
// Named classes
// ---------------------------------------------------------------------------

// [P(O(t_1) + ... + O(t_r)) over P^m] for twists t_k in {0,1}.
inline PolyZ projective_bundle_over_pm(int m, const std::vector<int>& twists) {
  if (twists.empty()) fail(ErrorCode::InvalidInput, "need at least one twist");
  for (int t : twists)
    if (t != 0 && t != 1)
      fail(ErrorCode::InvalidInput, "only twists 0 and 1 are supported");
  int weight = m + static_cast<int>(twists.size()) - 1;
  if (m < 0) fail(ErrorCode::InvalidInput, "negative base dimension");
  if (weight > 5)
    fail(ErrorCode::UnknownCoefficients, "bundle class weight exceeds the coefficient window");
  ProjectiveSpaceRing base(m);
  std::vector<SeriesZ> roots;
  for (int t : twists) roots.push_back(t == 1 ? base.hyperplane() : base.zero());
  return base.integrate(quillen_pushforward(base, roots));
}

// [Bl_pt P^m]: blowing up a point turns P^m into the bundle
// P(O(1) + O) over P^{m-1}.
inline PolyZ blowup_point_class(int m) {
  if (m < 2 || m > 5)
    fail(m > 5 ? ErrorCode::UnknownCoefficients : ErrorCode::InvalidInput,
         "point blow-up classes are available for dimensions 2..5");
  return projective_bundle_over_pm(m - 1, {1, 0});
}

// Class of the Milnor hypersurface H_{m,n} (a (1,1)-divisor in P^m x P^n):
//   [H_{m,n}] = [P^m][P^{n-1}] + [P^{m-1}][P^n]
//               + sum_{i=1..m} sum_{j=1..n} a_ij [P^{m-i}][P^{n-j}].
inline PolyZ milnor_class(int m, int n) {
  if (m < 1 || n < 1) fail(ErrorCode::InvalidInput, "Milnor hypersurface needs m, n >= 1");
  if (m + n - 1 > 5)
    fail(ErrorCode::UnknownCoefficients, "Milnor class weight exceeds the coefficient window");
  const SeriesZ& F = universal_law().F;
  PolyZ result = detail::pclass_any(m) * detail::pclass_any(n - 1) +
                 detail::pclass_any(m - 1) * detail::pclass_any(n);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      result += F.coefficient({i, j}) * detail::pclass_any(m - i) * detail::pclass_any(n - j);
  return result;
}

// The one-variable series phi(x)^2 - (1/x)(2 phi(x) - q(x,0) - u1) that
// computes classes of the split rank-3 bundles P(O(1) + O + O): its x^k
// coefficients integrate against [P^{m-k}].  Expansion starts
// u2 + 0*x + (-3u1^4 + 3u1^2u2 - u2^2 - 4u1u3 + u4)*x^2 + ...
inline SeriesZ split_rank3_bundle_series() {
  const BundleZ& bundle = universal_bundle();
  auto sys = bundle.system();
  SeriesZ x1 = SeriesZ::variable(sys, vars_x(), "x", bundle.phi.order() + 1, 5);
  SeriesZ q_x0 = bundle.q.compose(
      {{"x", x1}, {"y", SeriesZ::zero(sys, vars_x(), x1.order(), 5)}});
  SeriesZ u1 = SeriesZ::from_polynomial(bundle.p1, vars_x(), x1.order(), 5);
  SeriesZ phi = bundle.phi.extended_to(x1.order());
  return phi * phi - (phi + phi - q_x0 - u1).exact_divide(x1);
}

// The u5 coefficient of a_33 - a_51 - a_42 pins down the last generator; its
// specializations must die in both classical theories.
struct U5ColumnReport {
  PolyZ combination;      // a_33 - a_51 - a_42 over the universal coefficients
  Int u5_coefficient;     // must be 1
  PolyZ ktheory_image;    // must be 0
  PolyZ chow_image;       // must be 0
};

inline U5ColumnReport u5_column_check() {
  const SeriesZ& F = universal_law().F;
  PolyZ combo = F.coefficient({3, 3}) - F.coefficient({5, 1}) - F.coefficient({4, 2});
  Exponents u5(GeneratorSystem::lazard()->size(), 0);
  u5.back() = 1;
  return U5ColumnReport{
      combo, combo.coefficient(u5),
      combo.substitute(GeneratorSystem::kbeta(), ktheory_generator_images()),
      combo.substitute(GeneratorSystem::empty(), chow_generator_images())};
}

}  // namespace m0n
