#include <gtest/gtest.h>

#include "m0n/fgl.hpp"
#include "m0n/render.hpp"
#include "test_support.hpp"

namespace m0n {
namespace {

TEST(UniversalLaw, EmbeddedDataChecksumHolds) {
  EXPECT_EQ(universal_data_checksum(), kUniversalDataChecksum);
  EXPECT_NO_THROW(validate_universal_data());
}

TEST(UniversalLaw, ShapeAndSymmetry) {
  const LawZ& U = universal_law();
  auto L = U.system();
  EXPECT_EQ(U.F.order(), 7);
  EXPECT_EQ(U.F.weight_cap(), 5);
  EXPECT_EQ(U.max_reliable, 6);
  EXPECT_EQ(U.F.coefficient({1, 0}), PolyZ::one(L));
  EXPECT_EQ(U.F.coefficient({1, 1}), parse_z(L, "-u1"));
  EXPECT_EQ(U.F.coefficient({2, 1}), parse_z(L, "u1^2 - u2"));
  for (const auto& row : universal_coefficient_rows()) {
    PolyZ a = parse_z(L, row.text);
    EXPECT_EQ(U.F.coefficient({row.i, row.j}), a);
    EXPECT_EQ(U.F.coefficient({row.j, row.i}), a);
    EXPECT_TRUE(a.is_homogeneous_of(row.i + row.j - 1));
  }
  EXPECT_TRUE(U.F.is_combined_homogeneous_of(1));
}

TEST(UniversalLaw, OrderGates) {
  EXPECT_EQ(universal_law(2).F.order(), 2);
  EXPECT_TRUE(ThrowsCode([] { universal_law(8); }, ErrorCode::UnknownCoefficients));
  EXPECT_TRUE(ThrowsCode([] { universal_law(1); }, ErrorCode::InvalidInput));
}

TEST(LawAxioms, AllBuiltInLawsValidate) {
  EXPECT_TRUE(validate_law(universal_law()).ok);
  EXPECT_TRUE(validate_law(additive_law()).ok);
  EXPECT_TRUE(validate_law(multiplicative_law()).ok);
}

TEST(LawAxioms, PerturbedCoefficientIsCaught) {
  // Corrupting the x^2 y^2 coefficient keeps the unit and commutativity
  // axioms intact but must break associativity at total degree 4.
  const LawZ& U = universal_law();
  SeriesZ F = U.F;
  F.add_term({2, 2}, PolyZ::one(U.system()));
  LawZ bad{"perturbed", std::move(F), U.max_reliable};

  LawReport<Int> report = validate_law(bad);
  ASSERT_FALSE(report.ok);
  bool assoc_defect_at_4 = false;
  for (const auto& d : report.defects) {
    EXPECT_EQ(d.context, "associativity") << to_text(d.lhs) << " vs " << to_text(d.rhs);
    if (PolyZ::term_degree(d.exponents) == 4) assoc_defect_at_4 = true;
  }
  EXPECT_TRUE(assoc_defect_at_4);

  // The logarithm only sees the y-linear jet, so the rebuilt law disagrees
  // with the corrupted one exactly where the corruption sits.
  LawReport<Rat> rec = reconstruct_law(bad);
  ASSERT_FALSE(rec.ok);
  bool found = false;
  for (const auto& d : rec.defects)
    if (d.exponents == Exponents{2, 2}) found = true;
  EXPECT_TRUE(found);
  EXPECT_TRUE(reconstruct_law(U).ok);
  EXPECT_TRUE(reconstruct_law(multiplicative_law(7)).ok);
}

TEST(Logarithm, MultiplicativeLawHasTheClassicalSeries) {
  // l(x) = sum beta^{k-1} x^k / k for x + y - beta x y.
  SeriesQ l = log_series(multiplicative_law(6));
  auto K = GeneratorSystem::kbeta();
  for (int k = 1; k <= 6; ++k)
    EXPECT_EQ(l.coefficient_at(k), PolyQ::monomial(K, {k - 1}, Rat(1, k))) << "degree " << k;
}

TEST(DerivedBundle, InverseAndQuotientRelations) {
  const BundleZ& B = universal_bundle();
  auto L = B.system();
  auto x1 = SeriesZ::variable(L, vars_x(), "x", B.chi.order(), 5);

  // F(x, chi(x)) = 0.
  EXPECT_TRUE(B.law.F.compose({{"x", x1}, {"y", B.chi}}).is_zero());
  EXPECT_EQ(B.chi.coefficient_at(1), -PolyZ::one(L));

  // x * chi * phi = x + chi.
  EXPECT_EQ(x1 * B.chi * B.phi, x1 + B.chi);

  // q_ij = -a_{i+1,j+1} inside the complete window.
  for (int i = 0; i + 1 <= 3; ++i)
    for (int j = 0; i + j <= 4; ++j)
      EXPECT_EQ(B.q.coefficient({i, j}), -B.law.F.coefficient({i + 1, j + 1}))
          << "(" << i << "," << j << ")";

  EXPECT_TRUE(B.chi.is_combined_homogeneous_of(1));
  EXPECT_TRUE(B.q.is_combined_homogeneous_of(-1));
  EXPECT_TRUE(B.phi.is_combined_homogeneous_of(-1));
  EXPECT_TRUE(B.b.is_combined_homogeneous_of(-2));
}

TEST(DerivedBundle, CSeriesAndLineClass) {
  const BundleZ& B = universal_bundle();
  auto L = B.system();
  ASSERT_EQ(B.c.size(), 6u);  // c_0 .. c_5: one entry per trusted weight
  EXPECT_EQ(B.c[0], -PolyZ::one(L));
  EXPECT_EQ(B.c[1], B.p1);
  EXPECT_EQ(B.p1, parse_z(L, "u1"));
  for (int j = 0; j < 6; ++j) {
    EXPECT_TRUE(B.c[j].is_homogeneous_of(j)) << "c_" << j;
    if (j >= 1) {
      EXPECT_EQ(B.c[j], B.phi.coefficient_at(j - 1));
    }
  }
  EXPECT_EQ(B.c[3], parse_z(L, "u1^3 - u1*u2 + u3"));
}

TEST(DerivedBundle, BoundaryCoefficientMapMatchesSeries) {
  const BundleZ& B = universal_bundle();
  std::size_t count = 0;
  for (const auto& [e, p] : B.b.coefficients()) {
    auto it = B.b_ij.find({e[0], e[1]});
    ASSERT_NE(it, B.b_ij.end());
    EXPECT_EQ(it->second, p);
    ++count;
  }
  EXPECT_EQ(B.b_ij.size(), count);
  auto L = B.system();
  EXPECT_EQ(B.b_ij.at({0, 0}), parse_z(L, "u1^2 - u2"));
  EXPECT_EQ(B.b_ij.at({1, 1}), parse_z(L, "4*u1^4 - 4*u1^2*u2 + u2^2 + 5*u1*u3 - u4"));
  // b is not symmetric: the y-linear term is twice the x-linear one.
  EXPECT_EQ(B.b_ij.at({0, 1}), B.b_ij.at({1, 0}) * Int(2));
}

TEST(Specialization, GeneratorImages) {
  auto K = GeneratorSystem::kbeta();
  const auto& images = ktheory_generator_images();
  ASSERT_EQ(images.size(), 5u);
  EXPECT_EQ(images[0], PolyZ::monomial(K, {1}, 1));
  EXPECT_EQ(images[1], PolyZ::monomial(K, {2}, 1));
  EXPECT_TRUE(images[2].is_zero());
  EXPECT_EQ(images[3], PolyZ::monomial(K, {4}, 1));
  EXPECT_EQ(images[4], PolyZ::monomial(K, {5}, -1));

  const auto& zeros = chow_generator_images();
  ASSERT_EQ(zeros.size(), 5u);
  for (const auto& z : zeros) EXPECT_TRUE(z.is_zero());
}

TEST(Specialization, ImagesCarryTheLawOntoItsSpecializations) {
  const LawZ& U = universal_law();
  SeriesZ toK = U.F.substitute_coefficients(GeneratorSystem::kbeta(),
                                            ktheory_generator_images());
  EXPECT_TRUE(toK.truncated_to(6).agrees_with(multiplicative_law(6).F));
  SeriesZ toA = U.F.substitute_coefficients(GeneratorSystem::empty(),
                                            chow_generator_images());
  EXPECT_TRUE(toA.truncated_to(6).agrees_with(additive_law(6).F));
}

TEST(Specialization, BundleSpecializationMatchesDirectDerivation) {
  auto K = GeneratorSystem::kbeta();
  BundleZ direct = derive_bundle(multiplicative_law(7));
  BundleZ via = specialize_bundle(universal_bundle(), K, ktheory_generator_images());
  EXPECT_EQ(via.p1, PolyZ::generator(K, 0));
  EXPECT_EQ(via.p1, direct.p1);
  // Within the window where the capped universal data is complete.
  EXPECT_TRUE(via.chi.truncated_to(6).agrees_with(direct.chi));
  EXPECT_TRUE(via.q.truncated_to(4).agrees_with(direct.q));
  EXPECT_TRUE(via.phi.truncated_to(4).agrees_with(direct.phi));
  EXPECT_TRUE(via.b.truncated_to(3).agrees_with(direct.b));
}

}  // namespace
}  // namespace m0n
