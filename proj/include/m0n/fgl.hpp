#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "m0n/parse.hpp"
#include "m0n/truncated_series.hpp"

namespace m0n {

// ---------------------------------------------------------------------------
// Embedded coefficients of the universal formal group law
//
//   F(x,y) = x + y + sum_{i,j>=1} a_ij x^i y^j
//
// over the five-generator coefficient ring, complete through total degree
// i+j <= 6 (equivalently coefficient weight <= 5).  The table lists i >= j;
// the law is commutative, so a_ij = a_ji.  A checksum guards the literals
// against accidental edits: validate_universal_data() recomputes it and the
// law is cross-checked structurally (associativity, logarithm round-trip) by
// validate_law / reconstruct_law.
// ---------------------------------------------------------------------------

struct UniversalCoefficientRow {
  int i, j;
  const char* text;
};

inline const std::array<UniversalCoefficientRow, 9>& universal_coefficient_rows() {
  static const std::array<UniversalCoefficientRow, 9> rows = {{
      {1, 1, "-u1"},
      {2, 1, "u1^2 - u2"},
      {3, 1, "-2*u1^3 + 2*u1*u2 - 2*u3"},
      {2, 2, "-4*u1^3 + 4*u1*u2 - 3*u3"},
      {4, 1, "3*u1^4 - 3*u1^2*u2 + u2^2 + 4*u1*u3 - u4"},
      {3, 2, "10*u1^4 - 11*u1^2*u2 + 3*u2^2 + 11*u1*u3 - 2*u4"},
      {5, 1, "-4*u1^5 + 2*u1^3*u2 - 6*u1*u2^2 - 6*u1^2*u3 + 4*u2*u3 + 2*u1*u4 - 6*u5"},
      {4, 2, "-21*u1^5 + 21*u1^3*u2 - 22*u1*u2^2 - 28*u1^2*u3 + 15*u2*u3 + 7*u1*u4 - 15*u5"},
      {3, 3, "-34*u1^5 + 37*u1^3*u2 - 33*u1*u2^2 - 43*u1^2*u3 + 22*u2*u3 + 10*u1*u4 - 20*u5"},
  }};
  return rows;
}

// FNV-1a, 64-bit; stable and dependency-free.
inline std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t universal_data_checksum() {
  std::string blob;
  for (const auto& row : universal_coefficient_rows()) {
    blob += std::to_string(row.i) + "," + std::to_string(row.j) + ":" + row.text + ";";
  }
  return fnv1a64(blob);
}

// Frozen at data-entry time; recomputed on every load.
inline constexpr std::uint64_t kUniversalDataChecksum = 0x7b267293aa3ad9faull;

inline void validate_universal_data() {
  std::uint64_t actual = universal_data_checksum();
  if (actual != kUniversalDataChecksum)
    fail(ErrorCode::CorruptData, "universal coefficient table checksum mismatch");
}

// ---------------------------------------------------------------------------
// Formal group laws
// ---------------------------------------------------------------------------

template <class C>
struct FormalGroupLaw {
  std::string name;
  TruncatedSeries<C> F;  // two variables (x, y)
  // Total xy-degree through which F's coefficients are trusted.  Together
  // with the series weight cap this bounds every downstream computation.
  int max_reliable;

  const SystemPtr& system() const { return F.system(); }
};

using LawZ = FormalGroupLaw<Int>;
using LawQ = FormalGroupLaw<Rat>;

// Largest coefficient weight the law's outputs may use; -1 means unbounded.
template <class C>
int law_weight_cap(const FormalGroupLaw<C>& law) {
  return law.F.weight_cap();
}

inline constexpr int kUniversalMaxOrder = 7;

// The universal law at the requested series order (<= 7; beyond that the
// embedded table would be silently incomplete, so we refuse).
inline const LawZ& universal_law(int order = kUniversalMaxOrder) {
  if (order < 2 || order > kUniversalMaxOrder)
    fail(order > kUniversalMaxOrder ? ErrorCode::UnknownCoefficients : ErrorCode::InvalidInput,
         "universal law is available at series orders 2.." + std::to_string(kUniversalMaxOrder));
  static std::map<int, LawZ> cache;
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;

  validate_universal_data();
  auto sys = GeneratorSystem::lazard();
  // Weight cap 5: the generator ring is complete only through weight 5, so
  // higher-weight monomials are never meaningful.
  SeriesZ F(sys, vars_xy(), order, 5);
  F.add_term({1, 0}, PolyZ::one(sys));
  F.add_term({0, 1}, PolyZ::one(sys));
  for (const auto& row : universal_coefficient_rows()) {
    PolyZ a = parse_z(sys, row.text);
    F.add_term({row.i, row.j}, a);
    if (row.i != row.j) F.add_term({row.j, row.i}, a);
  }
  return cache.emplace(order, LawZ{"universal", std::move(F), 6}).first->second;
}

// F(x,y) = x + y: the additive law over the empty system (scalar ring Z).
inline const LawZ& additive_law(int order = 8) {
  static std::map<int, LawZ> cache;
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  auto sys = GeneratorSystem::empty();
  SeriesZ F(sys, vars_xy(), order);
  F.add_term({1, 0}, PolyZ::one(sys));
  F.add_term({0, 1}, PolyZ::one(sys));
  return cache.emplace(order, LawZ{"additive", std::move(F), 1 << 28}).first->second;
}

// F(x,y) = x + y - beta*x*y: the multiplicative law.
inline const LawZ& multiplicative_law(int order = 8) {
  static std::map<int, LawZ> cache;
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  auto sys = GeneratorSystem::kbeta();
  SeriesZ F(sys, vars_xy(), order);
  F.add_term({1, 0}, PolyZ::one(sys));
  F.add_term({0, 1}, PolyZ::one(sys));
  F.add_term({1, 1}, -PolyZ::generator(sys, 0));
  return cache.emplace(order, LawZ{"multiplicative", std::move(F), 1 << 28}).first->second;
}

// ---------------------------------------------------------------------------
// Law validation
// ---------------------------------------------------------------------------

template <class C>
struct LawDefect {
  Exponents exponents;           // variable exponents of the disagreeing term
  GradedPolynomial<C> lhs, rhs;  // the two coefficient values
  std::string context;           // which axiom / which side
};

template <class C>
struct LawReport {
  bool ok = true;
  std::vector<LawDefect<C>> defects;
};

template <class C>
void collect_defects(LawReport<C>& report, const TruncatedSeries<C>& lhs,
                     const TruncatedSeries<C>& rhs, int through_degree,
                     const std::string& context) {
  int limit = std::min({through_degree, lhs.order(), rhs.order()});
  auto scan = [&](const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) {
    for (const auto& [e, p] : a.coefficients()) {
      if (GradedPolynomial<C>::term_degree(e) > limit) continue;
      auto other = b.coefficient(e);
      if (!(p == other)) {
        // Record each disagreement once, keyed by exponent.
        bool seen = false;
        for (const auto& d : report.defects)
          if (d.exponents == e && d.context == context) { seen = true; break; }
        if (!seen) {
          report.ok = false;
          report.defects.push_back({e, lhs.coefficient(e), rhs.coefficient(e), context});
        }
      }
    }
  };
  scan(lhs, rhs);
  scan(rhs, lhs);
}

// Checks the group-law axioms through min(law order, max_reliable):
// F(x,0) = x, F(0,y) = y, commutativity and associativity.
template <class C>
LawReport<C> validate_law(const FormalGroupLaw<C>& law) {
  LawReport<C> report;
  const auto& sys = law.system();
  int order = law.F.order();
  int cap = law.F.weight_cap();
  int limit = std::min(order, law.max_reliable);

  auto x1 = TruncatedSeries<C>::variable(sys, vars_x(), "x", order, cap);
  auto zero1 = TruncatedSeries<C>::zero(sys, vars_x(), order, cap);
  collect_defects(report, law.F.compose({{"x", x1}, {"y", zero1}}), x1, limit, "right unit");
  collect_defects(report, law.F.compose({{"x", zero1}, {"y", x1}}), x1, limit, "left unit");

  auto x2 = TruncatedSeries<C>::variable(sys, vars_xy(), "x", order, cap);
  auto y2 = TruncatedSeries<C>::variable(sys, vars_xy(), "y", order, cap);
  collect_defects(report, law.F.compose({{"x", y2}, {"y", x2}}), law.F, limit, "commutativity");

  auto x3 = TruncatedSeries<C>::variable(sys, vars_xyz(), "x", order, cap);
  auto y3 = TruncatedSeries<C>::variable(sys, vars_xyz(), "y", order, cap);
  auto z3 = TruncatedSeries<C>::variable(sys, vars_xyz(), "z", order, cap);
  auto Fxy = law.F.compose({{"x", x3}, {"y", y3}});
  auto Fyz = law.F.compose({{"x", y3}, {"y", z3}});
  auto left = law.F.compose({{"x", Fxy}, {"y", z3}});
  auto right = law.F.compose({{"x", x3}, {"y", Fyz}});
  collect_defects(report, left, right, limit, "associativity");
  return report;
}

// ---------------------------------------------------------------------------
// Derived series bundle: everything the intersection recursion consumes.
//
//   chi : formal inverse, F(x, chi(x)) = 0
//   q   : F(x,y) = x + y - x y q(x,y)
//   phi : q(x, chi(x));  the relation x chi(x) phi(x) = x + chi(x) holds
//   c_j : x / chi(x) = sum c_j x^j   (so c_0 = -1, c_j = phi_{j-1} for j >= 1)
//   b   : (1/x)(phi(F) - phi(y)) + (1/y - phi(y))(phi(F) - phi(x))
//         + (1/F)(phi(y) - q(x,y)) = sum b_ij x^i y^j
//   p1  : phi(0), the class of the line in the theory's coefficient ring
// ---------------------------------------------------------------------------

template <class C>
struct SeriesBundle {
  FormalGroupLaw<C> law;
  TruncatedSeries<C> chi;   // one variable
  TruncatedSeries<C> q;     // two variables
  TruncatedSeries<C> phi;   // one variable
  TruncatedSeries<C> b;     // two variables
  std::vector<GradedPolynomial<C>> c;                       // c[j]
  std::map<std::pair<int, int>, GradedPolynomial<C>> b_ij;  // nonzero b coefficients
  GradedPolynomial<C> p1;

  const SystemPtr& system() const { return law.system(); }
};

using BundleZ = SeriesBundle<Int>;

template <class C>
SeriesBundle<C> derive_bundle(const FormalGroupLaw<C>& law) {
  const auto& sys = law.system();
  int order = law.F.order();
  int cap = law.F.weight_cap();

  auto x1 = TruncatedSeries<C>::variable(sys, vars_x(), "x", order, cap);
  auto x2 = TruncatedSeries<C>::variable(sys, vars_xy(), "x", order, cap);
  auto y2 = TruncatedSeries<C>::variable(sys, vars_xy(), "y", order, cap);

  // chi by fixed-point iteration on chi = -x - G(x, chi), G = F - x - y.
  TruncatedSeries<C> G = law.F - x2 - y2;
  TruncatedSeries<C> chi = -x1;
  for (int k = 0; k < order; ++k) chi = -x1 - G.compose({{"x", x1}, {"y", chi}});
  if (!law.F.compose({{"x", x1}, {"y", chi}}).is_zero())
    fail(ErrorCode::CorruptData, "formal inverse does not cancel the law");

  TruncatedSeries<C> q = (x2 + y2 - law.F).exact_divide(x2 * y2);
  TruncatedSeries<C> phi = q.compose({{"x", x1}, {"y", chi}});

  // c-series via x/chi = x*phi - 1; cross-checked against direct division.
  std::vector<GradedPolynomial<C>> c;
  c.push_back(-GradedPolynomial<C>::one(sys));
  for (int j = 1; j <= phi.order() + 1; ++j) c.push_back(phi.coefficient_at(j - 1));
  {
    auto direct = x1.exact_divide(chi);
    for (int j = 0; j <= direct.order(); ++j)
      if (!(direct.coefficient_at(j) == c[j]))
        fail(ErrorCode::CorruptData, "inconsistent c-series derivations");
  }
  // c_j has weight j; beyond the weight cap the entry is not knowledge but
  // pruning, so drop it rather than report a spurious zero.
  if (cap >= 0 && static_cast<int>(c.size()) > cap + 1)
    c.erase(c.begin() + (cap + 1), c.end());

  auto phi_x = phi.compose({{"x", x2}});
  auto phi_y = phi.compose({{"x", y2}});
  auto phi_F = phi.compose({{"x", law.F}});
  TruncatedSeries<C> b = (phi_F - phi_y).exact_divide(x2) +
                         (phi_F - phi_x).exact_divide(y2) - phi_y * (phi_F - phi_x) +
                         (phi_y - q).exact_divide(law.F);

  std::map<std::pair<int, int>, GradedPolynomial<C>> b_ij;
  for (const auto& [e, p] : b.coefficients()) b_ij.emplace(std::make_pair(e[0], e[1]), p);

  GradedPolynomial<C> p1 = phi.constant_term();
  return SeriesBundle<C>{law, std::move(chi), std::move(q), std::move(phi),
                         std::move(b), std::move(c), std::move(b_ij), std::move(p1)};
}

// The derived bundle of the universal law, shared by the geometry layer.
inline const BundleZ& universal_bundle() {
  static const BundleZ bundle = derive_bundle(universal_law());
  return bundle;
}

// Coefficient-wise specialization of a bundle along generator images,
// e.g. universal -> multiplicative or universal -> additive.
template <class C>
SeriesBundle<C> specialize_bundle(const SeriesBundle<C>& bundle, const SystemPtr& target,
                                  const std::vector<GradedPolynomial<C>>& images,
                                  int new_cap = -1) {
  SeriesBundle<C> out{
      FormalGroupLaw<C>{bundle.law.name + "->" + target->name(),
                        bundle.law.F.substitute_coefficients(target, images, new_cap),
                        bundle.law.max_reliable},
      bundle.chi.substitute_coefficients(target, images, new_cap),
      bundle.q.substitute_coefficients(target, images, new_cap),
      bundle.phi.substitute_coefficients(target, images, new_cap),
      bundle.b.substitute_coefficients(target, images, new_cap),
      {},
      {},
      bundle.p1.substitute(target, images)};
  for (const auto& cj : bundle.c) out.c.push_back(cj.substitute(target, images));
  for (const auto& [e, p] : out.b.coefficients()) out.b_ij.emplace(std::make_pair(e[0], e[1]), p);
  return out;
}

// ---------------------------------------------------------------------------
// Logarithm / reconstruction
// ---------------------------------------------------------------------------

// The logarithm l(x) = x + ... with l(F(x,y)) = l(x) + l(y), computed over
// rational coefficients as the antiderivative of 1 / (dF/dy)(x, 0).
inline SeriesQ log_series(const LawZ& law) {
  SeriesQ F = to_rational(law.F);
  auto sys = F.system();
  auto x1 = SeriesQ::variable(sys, vars_x(), "x", F.order(), F.weight_cap());
  auto zero1 = SeriesQ::zero(sys, vars_x(), F.order(), F.weight_cap());
  SeriesQ omega = F.derivative("y").compose({{"x", x1}, {"y", zero1}});
  return omega.invert_unit().antiderivative("x");
}

// Rebuilds the law from its own logarithm: exp = revert(l), then
// F_rec(x,y) = exp(l(x) + l(y)).  Any disagreement with the stored
// coefficients (through the reliable degree) is reported; a clean pass is a
// strong independent certificate for the embedded table.
inline LawReport<Rat> reconstruct_law(const LawZ& law) {
  SeriesQ F = to_rational(law.F);
  SeriesQ l = log_series(law).truncated_to(F.order());
  SeriesQ exp = l.revert();
  auto sys = F.system();
  auto x2 = SeriesQ::variable(sys, vars_xy(), "x", F.order(), F.weight_cap());
  auto y2 = SeriesQ::variable(sys, vars_xy(), "y", F.order(), F.weight_cap());
  SeriesQ lsum = l.compose({{"x", x2}}) + l.compose({{"x", y2}});
  SeriesQ F_rec = exp.compose({{"x", lsum}});
  LawReport<Rat> report;
  collect_defects(report, F_rec, F, std::min(F.order(), law.max_reliable), "log/exp reconstruction");
  return report;
}

// ---------------------------------------------------------------------------
// Multiplicative specialization of the universal coefficients
// ---------------------------------------------------------------------------

// Images of u1..u5 in the multiplicative theory, solved triangularly from the
// x^k y column of the two laws and then verified against every embedded
// coefficient.  (beta, beta^2, 0, beta^4, -beta^5.)
inline const std::vector<PolyZ>& ktheory_generator_images() {
  static const std::vector<PolyZ> images = [] {
    const LawZ& U = universal_law();
    const LawZ& M = multiplicative_law(kUniversalMaxOrder);
    auto lazard = U.system();
    auto kbeta = M.system();
    std::vector<PolyZ> out;
    for (int k = 1; k <= 5; ++k) {
      PolyZ column = U.F.coefficient({k, 1});  // a_{k,1}
      Exponents unit(lazard->size(), 0);
      unit[k - 1] = 1;
      Int gamma = column.coefficient(unit);
      if (gamma == 0)
        fail(ErrorCode::InconsistentSystem, "u" + std::to_string(k) + " does not appear in its column");
      PolyZ rest = column - PolyZ::monomial(lazard, unit, gamma);
      // Substitute the images found so far; u_k..u5 cannot occur in `rest`
      // (its terms have weight k built from lower generators), so zeros are
      // safe placeholders.
      std::vector<PolyZ> partial = out;
      while (partial.size() < lazard->size()) partial.push_back(PolyZ::zero(kbeta));
      PolyZ value = M.F.coefficient({k, 1}) - rest.substitute(kbeta, partial);
      PolyZ image(kbeta);
      for (const auto& [e, coeff] : value.terms())
        image.add_term(e, CoeffTraits<Int>::divide(coeff, gamma, ErrorCode::InconsistentSystem));
      out.push_back(std::move(image));
    }
    // Certify: the images must send every embedded coefficient to its
    // multiplicative counterpart.
    SeriesZ mapped = U.F.substitute_coefficients(kbeta, out);
    if (!mapped.truncated_to(6).agrees_with(M.F.truncated_to(6)))
      fail(ErrorCode::InconsistentSystem, "generator images do not reproduce the multiplicative law");
    return out;
  }();
  return images;
}

// Images of u1..u5 in the additive theory: all zero.
inline const std::vector<PolyZ>& chow_generator_images() {
  static const std::vector<PolyZ> images(5, PolyZ::zero(GeneratorSystem::empty()));
  return images;
}

}  // namespace m0n
