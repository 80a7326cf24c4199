#pragma once

#include <string>
#include <utility>
#include <vector>

#include "m0n/basis.hpp"
#include "m0n/moduli.hpp"
#include "m0n/parse.hpp"
#include "m0n/reference_data.hpp"
#include "m0n/render.hpp"

namespace m0n {

// One named verification with a human-readable list of disagreements.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> diffs;

  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    passed = false;
    diffs.push_back(what);
  }
};

namespace detail {

inline std::string d_text(const std::vector<int>& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(d[i]);
  }
  return out + ")";
}

template <class C>
void expect_equal(CheckResult& r, const GradedPolynomial<C>& got, const GradedPolynomial<C>& want,
                  const std::string& label) {
  if (got == want) return;
  r.expect(false, label + ": computed " + to_text(got) + ", expected " + to_text(want));
}

// Partitions of w with parts in 1..5, as exponent-vector multiplicities.
inline std::vector<std::vector<int>> partitions_up_to_five(int w) {
  std::vector<std::vector<int>> out;
  for (const Exponents& e : monomials_of_weight(GeneratorSystem::lazard(), w)) {
    std::vector<int> parts;
    for (int i = 4; i >= 0; --i)
      for (int k = 0; k < e[i]; ++k) parts.push_back(i + 1);
    out.push_back(std::move(parts));
  }
  return out;
}

}  // namespace detail

// 1. Every tabulated psi-class number, recomputed from the recursion.
inline CheckResult check_psi_tables() {
  CheckResult r{"psi-tables"};
  auto sys = GeneratorSystem::lazard();
  for (const auto& entry : reference::psi_table()) {
    PolyZ got = psi_intersection(entry.n, entry.d, universal_theory());
    PolyZ want = parse_z(sys, entry.value);
    detail::expect_equal(r, got, want,
                         "psi n=" + std::to_string(entry.n) + " d=" + detail::d_text(entry.d));
  }
  return r;
}

// 2. The classes of the spaces themselves (psi-free integrals), n = 3..8.
inline CheckResult check_total_space_classes() {
  CheckResult r{"total-space-classes"};
  auto sys = GeneratorSystem::lazard();
  for (const auto& entry : reference::psi_table()) {
    if (!entry.d.empty()) continue;
    detail::expect_equal(r, m0n_class(entry.n, universal_theory()), parse_z(sys, entry.value),
                         "class n=" + std::to_string(entry.n));
  }
  return r;
}

// 3. The same classes over the projective-class basis.
inline CheckResult check_projective_basis_expansions() {
  CheckResult r{"projective-basis-expansions"};
  auto pb = GeneratorSystem::pbasis();
  for (const auto& [n, text] : reference::pbasis_expansion_table()) {
    PolyQ got = to_projective_basis(m0n_class(n, universal_theory()));
    detail::expect_equal(r, got, parse_q(pb, text), "p-basis n=" + std::to_string(n));
  }
  return r;
}

// The named derived series of the universal law, as exposed to displays and
// the command-line tool.
inline const std::vector<std::string>& series_names() {
  static const std::vector<std::string> names = {
      "law", "chi", "q", "phi", "x-over-chi", "phi-of-sum", "b", "rank3-bundle-series"};
  return names;
}

inline SeriesZ named_series(const std::string& name) {
  const BundleZ& B = universal_bundle();
  if (name == "law") return B.law.F;
  if (name == "chi") return B.chi;
  if (name == "q") return B.q;
  if (name == "phi") return B.phi;
  if (name == "x-over-chi") {
    auto x1 = SeriesZ::variable(B.system(), vars_x(), "x", B.chi.order(), 5);
    return x1.exact_divide(B.chi);
  }
  if (name == "phi-of-sum") return B.phi.compose({{"x", B.law.F}});
  if (name == "b") return B.b;
  if (name == "rank3-bundle-series") return split_rank3_bundle_series();
  fail(ErrorCode::InvalidInput, "unknown series '" + name + "'");
}

// 4. Canonical displays of the derived series of the universal law.
inline CheckResult check_series_displays() {
  CheckResult r{"series-displays"};
  for (const auto& item : reference::series_display_table()) {
    std::string got = to_text(named_series(item.name).truncated_to(item.through));
    r.expect(got == item.text,
             std::string(item.name) + ": computed \"" + got + "\", expected \"" + item.text + "\"");
  }
  return r;
}

// 5. Group-law axioms and the logarithm round trip.
inline CheckResult check_law_consistency() {
  CheckResult r{"law-consistency"};
  auto report_on = [&](const char* label, const auto& report) {
    r.expect(report.ok, std::string(label) + ": " +
                            std::to_string(report.defects.size()) + " defect(s), first at " +
                            (report.defects.empty() ? "?" : report.defects.front().context));
  };
  report_on("universal axioms", validate_law(universal_law()));
  report_on("additive axioms", validate_law(additive_law()));
  report_on("multiplicative axioms", validate_law(multiplicative_law()));
  report_on("logarithm round trip", reconstruct_law(universal_law()));
  return r;
}

// 6. The two classical specializations cohere with the universal computation.
inline CheckResult check_specialization_coherence() {
  CheckResult r{"specialization-coherence"};
  const auto& k_images = ktheory_generator_images();
  const auto& a_images = chow_generator_images();
  auto kbeta = GeneratorSystem::kbeta();
  auto empty = GeneratorSystem::empty();

  for (const auto& entry : reference::psi_table()) {
    PolyZ universal = psi_intersection(entry.n, entry.d, universal_theory());
    std::string where = "n=" + std::to_string(entry.n) + " d=" + detail::d_text(entry.d);
    detail::expect_equal(r, universal.substitute(empty, a_images),
                         psi_intersection(entry.n, entry.d, chow_theory()),
                         "additive image vs native, " + where);
    detail::expect_equal(r, psi_intersection(entry.n, entry.d, chow_theory()),
                         chow_closed_form(entry.n, entry.d), "additive closed form, " + where);
    detail::expect_equal(r, universal.substitute(kbeta, k_images),
                         psi_intersection(entry.n, entry.d, ktheory_theory()),
                         "multiplicative image vs native, " + where);
  }

  // Specializing the derived bundle commutes with deriving from the
  // specialized law, inside the complete windows.
  {
    BundleZ image = specialize_bundle(universal_bundle(), kbeta, k_images);
    BundleZ native = derive_bundle(multiplicative_law());
    r.expect(image.chi.truncated_to(6).agrees_with(native.chi), "multiplicative chi");
    r.expect(image.q.truncated_to(4).agrees_with(native.q), "multiplicative q");
    r.expect(image.phi.truncated_to(4).agrees_with(native.phi), "multiplicative phi");
    r.expect(image.b.truncated_to(3).agrees_with(native.b), "multiplicative b");
    r.expect(image.p1 == native.p1, "multiplicative p1");
    for (std::size_t j = 0; j < image.c.size() && j < native.c.size(); ++j)
      detail::expect_equal(r, image.c[j], native.c[j],
                           "multiplicative c_" + std::to_string(j));
  }
  {
    BundleZ image = specialize_bundle(universal_bundle(), empty, a_images);
    BundleZ native = derive_bundle(additive_law());
    r.expect(image.chi.truncated_to(6).agrees_with(native.chi), "additive chi");
    r.expect(image.q.truncated_to(4).agrees_with(native.q), "additive q");
    r.expect(image.phi.truncated_to(4).agrees_with(native.phi), "additive phi");
    r.expect(image.b.truncated_to(3).agrees_with(native.b), "additive b");
    r.expect(image.p1 == native.p1, "additive p1");
    for (std::size_t j = 0; j < image.c.size() && j < native.c.size(); ++j)
      detail::expect_equal(r, image.c[j], native.c[j], "additive c_" + std::to_string(j));
  }

  // Both specializations kill every bullet coefficient.
  r.expect(chow_theory().b_is_zero(), "additive bullet series vanishes");
  r.expect(ktheory_theory().b_is_zero(), "multiplicative bullet series vanishes");
  for (const auto& [ij, p] : universal_bundle().b_ij) {
    r.expect(p.substitute(empty, a_images).is_zero(),
             "additive image of b_" + std::to_string(ij.first) + std::to_string(ij.second));
    r.expect(p.substitute(kbeta, k_images).is_zero(),
             "multiplicative image of b_" + std::to_string(ij.first) + std::to_string(ij.second));
  }

  // Twisted multiplicative classes: recursion vs closed form, n <= 9.
  for (int n = 3; n <= 9; ++n)
    for (int w = 0; w <= n - 3 && w <= 5; ++w)
      for (const auto& parts : detail::partitions_up_to_five(w))
        detail::expect_equal(r, ktheory_twisted_recursion(n, parts),
                             ktheory_twisted_closed_form(n, parts),
                             "twisted n=" + std::to_string(n) + " d=" + detail::d_text(parts));
  for (const auto& entry : reference::ktheory_twisted_table())
    detail::expect_equal(r, ktheory_twisted_closed_form(entry.n, entry.d),
                         parse_z(kbeta, entry.value),
                         "twisted reference n=" + std::to_string(entry.n) + " d=" +
                             detail::d_text(entry.d));
  return r;
}

// 7. In top degree the universal numbers are plain multinomial counts.
inline CheckResult check_top_degree_counts() {
  CheckResult r{"top-degree-counts"};
  auto sys = GeneratorSystem::lazard();
  for (int n = 3; n <= 8; ++n)
    for (const auto& parts : detail::partitions_up_to_five(n - 3))
      detail::expect_equal(r, psi_intersection(n, parts, universal_theory()),
                           PolyZ::constant(sys, multinomial(parts.begin(), parts.end())),
                           "top degree n=" + std::to_string(n) + " d=" + detail::d_text(parts));
  return r;
}

// 8. Classes of model varieties and the generator identities.
inline CheckResult check_geometry_classes() {
  CheckResult r{"geometry-classes"};
  auto sys = GeneratorSystem::lazard();
  auto kbeta = GeneratorSystem::kbeta();
  auto empty = GeneratorSystem::empty();
  const auto& k_images = ktheory_generator_images();
  const auto& a_images = chow_generator_images();

  auto named = [&](const char* name) -> PolyZ {
    if (name == std::string("P1")) return projective_space_class(1);
    if (name == std::string("P2")) return projective_space_class(2);
    if (name == std::string("P3")) return projective_space_class(3);
    if (name == std::string("P4")) return projective_space_class(4);
    if (name == std::string("P5")) return projective_space_class(5);
    if (name == std::string("Bl_pt P2")) return blowup_point_class(2);
    if (name == std::string("Bl_pt P3")) return blowup_point_class(3);
    if (name == std::string("H_{1,1}")) return milnor_class(1, 1);
    if (name == std::string("H_{2,1}")) return milnor_class(2, 1);
    if (name == std::string("a33 - a51 - a42")) return u5_column_check().combination;
    fail(ErrorCode::InvalidInput, std::string("unknown named class ") + name);
  };
  for (const auto& entry : reference::geometry_table())
    detail::expect_equal(r, named(entry.name), parse_z(sys, entry.value), entry.name);

  // Every variety class maps to beta^weight multiplicatively and dies
  // additively.
  for (const auto& entry : reference::geometry_table()) {
    if (entry.name == std::string("a33 - a51 - a42")) continue;
    PolyZ cls = named(entry.name);
    int w = cls.weight_of();
    detail::expect_equal(r, cls.substitute(kbeta, k_images), PolyZ::monomial(kbeta, {w}, 1),
                         std::string(entry.name) + " multiplicative image");
    r.expect(cls.substitute(empty, a_images).is_zero(),
             std::string(entry.name) + " additive image");
  }

  // The two split-bundle identities that pin down u4 and 2*u5.
  PolyZ p1c = projective_space_class(1);
  PolyZ p2c = projective_space_class(2);
  PolyZ v4 = projective_bundle_over_pm(2, {1, 0, 0});
  PolyZ v5 = projective_bundle_over_pm(3, {1, 0, 0});
  detail::expect_equal(
      r, v4 - p1c.pow(4) - p2c * p1c.pow(2) * Int(3) + blowup_point_class(3) * p1c * Int(4),
      parse_z(sys, "u4"), "rank-3 bundle identity for u4");
  detail::expect_equal(r, v5 - p1c * v4 - p1c.pow(3) * p2c - p1c * p2c.pow(2),
                       parse_z(sys, "2*u5"), "rank-3 bundle identity for 2*u5");

  // The last generator's column: unit coefficient, both images zero.
  U5ColumnReport rep = u5_column_check();
  r.expect(rep.u5_coefficient == 1, "u5 coefficient of the pinning combination");
  r.expect(rep.ktheory_image.is_zero(), "multiplicative image of the pinning combination");
  r.expect(rep.chow_image.is_zero(), "additive image of the pinning combination");

  // Spot values in the two classical theories.
  for (const auto& entry : reference::ktheory_table())
    detail::expect_equal(r, psi_intersection(entry.n, entry.d, ktheory_theory()),
                         parse_z(kbeta, entry.value),
                         "multiplicative n=" + std::to_string(entry.n) + " d=" +
                             detail::d_text(entry.d));
  for (const auto& entry : reference::chow_table())
    detail::expect_equal(r, psi_intersection(entry.n, entry.d, chow_theory()),
                         PolyZ::constant(empty, Int(entry.value)),
                         "additive n=" + std::to_string(entry.n) + " d=" +
                             detail::d_text(entry.d));
  return r;
}

// 9. Structural properties of the recursion and its supporting calculus.
inline CheckResult check_recursion_properties() {
  CheckResult r{"recursion-properties"};

  r.expect(enumerate_divisors(4).size() == 3, "divisor count at n=4");
  r.expect(enumerate_divisors(5).size() == 10, "divisor count at n=5");

  // Homogeneity: weight n-3-|d| or zero.
  for (const auto& entry : reference::psi_table()) {
    PolyZ v = psi_intersection(entry.n, entry.d, universal_theory());
    int total = 0;
    for (int x : entry.d) total += x;
    r.expect(v.is_homogeneous_of(entry.n - 3 - total),
             "homogeneity at n=" + std::to_string(entry.n) + " d=" + detail::d_text(entry.d));
  }

  // The result does not depend on which marking is forgotten or how the
  // markings are labeled.
  {
    struct Sample {
      int n;
      std::vector<int> exps;
      int forget;
    };
    std::vector<std::vector<Sample>> groups = {
        {{6, {2, 0, 0, 0, 0, 0}, 5}, {6, {0, 0, 2, 0, 0, 0}, 0}, {6, {0, 0, 0, 0, 0, 2}, 2}},
        {{7, {2, 1, 0, 0, 0, 0, 0}, 6}, {7, {0, 1, 0, 2, 0, 0, 0}, 4},
         {7, {0, 0, 1, 0, 0, 0, 2}, 0}},
        {{8, {2, 1, 1, 0, 0, 0, 0, 0}, 7}, {8, {1, 0, 2, 0, 1, 0, 0, 0}, 1},
         {8, {0, 0, 1, 0, 1, 0, 2, 0}, 3}},
    };
    std::vector<std::vector<int>> canon = {{2}, {2, 1}, {2, 1, 1}};
    for (std::size_t g = 0; g < groups.size(); ++g) {
      PolyZ expected = psi_intersection(groups[g][0].n, canon[g], universal_theory());
      for (const auto& s : groups[g])
        detail::expect_equal(r, psi_intersection_via_marking(s.n, s.exps, s.forget,
                                                            universal_theory()),
                             expected, "labeling independence, group " + std::to_string(g));
    }
  }

  // Pushforwards: trivial bundles over a point give projective spaces, and
  // the answer ignores the ordering of the roots.
  for (int rr = 2; rr <= 5; ++rr) {
    ProjectiveSpaceRing pt(0);
    std::vector<SeriesZ> roots(rr, pt.zero());
    detail::expect_equal(r, pt.integrate(quillen_pushforward(pt, roots)),
                         projective_space_class(rr - 1),
                         "pushforward of the trivial rank-" + std::to_string(rr) + " bundle");
  }
  {
    ProjectiveSpaceRing p2(2);
    std::vector<SeriesZ> a{p2.hyperplane(), p2.zero()};
    std::vector<SeriesZ> b{p2.zero(), p2.hyperplane()};
    detail::expect_equal(r, p2.integrate(quillen_pushforward(p2, a)),
                         p2.integrate(quillen_pushforward(p2, b)), "root permutation, rank 2");
    ProjectiveSpaceRing p1(1);
    std::vector<SeriesZ> c{p1.hyperplane(), p1.zero(), p1.zero()};
    std::vector<SeriesZ> d{p1.zero(), p1.zero(), p1.hyperplane()};
    detail::expect_equal(r, p1.integrate(quillen_pushforward(p1, c)),
                         p1.integrate(quillen_pushforward(p1, d)), "root permutation, rank 3");
  }

  // Basis round trips and non-degenerate change-of-basis matrices.
  for (int n = 5; n <= 8; ++n) {
    PolyZ v = m0n_class(n, universal_theory());
    r.expect(from_projective_basis(to_projective_basis(v)) == to_rational(v),
             "basis round trip at n=" + std::to_string(n));
  }
  for (int w = 0; w <= 5; ++w)
    r.expect(basis_determinant(w) != 0, "basis determinant at weight " + std::to_string(w));

  // A fresh cache reproduces what the shared cache holds.
  {
    IntersectionCache fresh;
    detail::expect_equal(r, psi_intersection(8, {1, 1}, universal_theory(), &fresh),
                         psi_intersection(8, {1, 1}, universal_theory()), "cache independence");
    detail::expect_equal(r, m0n_class(8, universal_theory(), &fresh),
                         m0n_class(8, universal_theory()), "cache independence, class");
  }

  // Combined degree (variable degree minus coefficient weight) of every
  // derived series.
  const BundleZ& B = universal_bundle();
  r.expect(B.law.F.is_combined_homogeneous_of(1), "combined degree of the law");
  r.expect(B.chi.is_combined_homogeneous_of(1), "combined degree of chi");
  r.expect(B.q.is_combined_homogeneous_of(-1), "combined degree of q");
  r.expect(B.phi.is_combined_homogeneous_of(-1), "combined degree of phi");
  r.expect(B.b.is_combined_homogeneous_of(-2), "combined degree of b");
  return r;
}

// 10. Behavior at the edge of the reliable window.
inline CheckResult check_boundary_behavior() {
  CheckResult r{"boundary-behavior"};

  bool threw = false;
  try {
    psi_intersection(9, {}, universal_theory());
  } catch (const Error& e) {
    threw = e.code() == ErrorCode::UnknownCoefficients;
  }
  r.expect(threw, "n=9 universal request is refused");

  // Dimension vanishing applies even where coefficients are unknown.
  r.expect(psi_intersection(9, {6, 1}, universal_theory()).is_zero(),
           "over-dimension input vanishes at n=9");
  r.expect(psi_intersection(5, {3}, universal_theory()).is_zero(),
           "over-dimension input vanishes at n=5");
  r.expect(psi_intersection(6, {1, 1}, universal_theory()).is_zero(),
           "in-window vanishing at n=6");

  // The classical theories keep going past n=8.
  detail::expect_equal(r, psi_intersection(9, {2, 2, 2}, chow_theory()),
                       chow_closed_form(9, {2, 2, 2}), "additive at n=9");
  detail::expect_equal(r, psi_intersection(10, {2, 1}, ktheory_theory()),
                       parse_z(GeneratorSystem::kbeta(), "7*beta^4"), "multiplicative at n=10");

  // Twisted recursion far outside the window, against the closed form.
  detail::expect_equal(r, ktheory_twisted_recursion(12, {3, 2, 1}),
                       ktheory_twisted_closed_form(12, {3, 2, 1}), "twisted at n=12");
  detail::expect_equal(r, ktheory_twisted_recursion(12, {1, 1, 1, 1}),
                       ktheory_twisted_closed_form(12, {1, 1, 1, 1}), "twisted at n=12, ones");
  return r;
}

inline std::vector<CheckResult> run_verification() {
  return {check_psi_tables(),
          check_total_space_classes(),
          check_projective_basis_expansions(),
          check_series_displays(),
          check_law_consistency(),
          check_specialization_coherence(),
          check_top_degree_counts(),
          check_geometry_classes(),
          check_recursion_properties(),
          check_boundary_behavior()};
}

}  // namespace m0n
