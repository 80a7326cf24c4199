#include <gtest/gtest.h>

#include "m0n/parse.hpp"
#include "m0n/render.hpp"
#include "test_support.hpp"

namespace m0n {
namespace {

TEST(GeneratorSystems, BuiltInsHaveExpectedShapes) {
  auto L = GeneratorSystem::lazard();
  EXPECT_EQ(L->name(), "lazard");
  ASSERT_EQ(L->size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(L->weight(i), static_cast<int>(i) + 1);
    EXPECT_EQ(L->symbol(i), "u" + std::to_string(i + 1));
  }
  EXPECT_EQ(L->complete_through(), 5);

  auto K = GeneratorSystem::kbeta();
  ASSERT_EQ(K->size(), 1u);
  EXPECT_EQ(K->symbol(0), "beta");
  EXPECT_EQ(K->complete_through(), -1);

  EXPECT_EQ(GeneratorSystem::empty()->size(), 0u);

  auto P = GeneratorSystem::pbasis();
  ASSERT_EQ(P->size(), 5u);
  EXPECT_EQ(P->symbol(2), "p3");
  EXPECT_EQ(P->weight(2), 3);
}

TEST(GeneratorSystems, LookupByName) {
  EXPECT_EQ(GeneratorSystem::by_name("lazard"), GeneratorSystem::lazard());
  EXPECT_EQ(GeneratorSystem::by_name("kbeta"), GeneratorSystem::kbeta());
  EXPECT_EQ(GeneratorSystem::by_name("empty"), GeneratorSystem::empty());
  EXPECT_EQ(GeneratorSystem::by_name("pbasis"), GeneratorSystem::pbasis());
  EXPECT_TRUE(ThrowsCode([] { GeneratorSystem::by_name("nope"); }, ErrorCode::InvalidInput));
}

TEST(GeneratorSystems, MixingSystemsIsRejected) {
  PolyZ a = PolyZ::generator(GeneratorSystem::lazard(), 0);
  PolyZ b = PolyZ::generator(GeneratorSystem::kbeta(), 0);
  EXPECT_TRUE(ThrowsCode([&] { a += b; }, ErrorCode::SystemMismatch));
  EXPECT_TRUE(ThrowsCode([&] { (void)(a * b); }, ErrorCode::SystemMismatch));
}

TEST(Coefficients, ExactIntegerDivision) {
  EXPECT_EQ(CoeffTraits<Int>::divide(Int(42), Int(-7)), Int(-6));
  EXPECT_TRUE(ThrowsCode([] { CoeffTraits<Int>::divide(Int(5), Int(2)); },
                         ErrorCode::DivisionNotExact));
  EXPECT_TRUE(ThrowsCode([] { CoeffTraits<Int>::divide(Int(5), Int(0)); },
                         ErrorCode::DivisionNotExact));
}

TEST(Coefficients, Counting) {
  EXPECT_EQ(factorial(0), Int(1));
  EXPECT_EQ(factorial(5), Int(120));
  std::vector<int> d{2, 2, 1};
  EXPECT_EQ(multinomial(d.begin(), d.end()), Int(30));
  std::vector<int> none;
  EXPECT_EQ(multinomial(none.begin(), none.end()), Int(1));
}

TEST(Polynomials, ArithmeticAndOrdering) {
  auto L = GeneratorSystem::lazard();
  PolyZ u1 = PolyZ::generator(L, 0);
  PolyZ u2 = PolyZ::generator(L, 1);
  PolyZ p = (u1 * u1 - u2 * Int(3)) * (u1 + u2);
  EXPECT_EQ(p, parse_z(L, "u1^3 + u1^2*u2 - 3*u1*u2 - 3*u2^2"));
  // Canonical order: higher total degree first, ties ascending lex.
  EXPECT_EQ(to_text(p), "u1^2*u2 + u1^3 - 3*u2^2 - 3*u1*u2");
  EXPECT_EQ(p - p, PolyZ::zero(L));
  EXPECT_EQ(u1.pow(0), PolyZ::one(L));
  EXPECT_EQ(u1.pow(3), parse_z(L, "u1^3"));
}

TEST(Polynomials, WeightBookkeeping) {
  auto L = GeneratorSystem::lazard();
  PolyZ h = parse_z(L, "4*u1^2 - 3*u2");
  EXPECT_TRUE(h.is_homogeneous_of(2));
  EXPECT_EQ(h.weight_of(), 2);
  EXPECT_EQ(h.weight(), std::optional<int>(2));

  PolyZ mixed = parse_z(L, "u1 + u2");
  EXPECT_EQ(mixed.weight(), std::nullopt);
  EXPECT_TRUE(ThrowsCode([&] { mixed.weight_of(); }, ErrorCode::NotHomogeneous));

  PolyZ z = PolyZ::zero(L);
  EXPECT_TRUE(z.is_homogeneous_of(3));
  EXPECT_EQ(z.weight_of(), 0);

  PolyZ trimmed = mixed;
  trimmed.drop_weight_above(1);
  EXPECT_EQ(trimmed, parse_z(L, "u1"));
  EXPECT_EQ(mixed.max_term_weight(), 2);
}

TEST(Polynomials, Substitution) {
  auto L = GeneratorSystem::lazard();
  auto K = GeneratorSystem::kbeta();
  PolyZ p = parse_z(L, "u1^2 - u2");
  std::vector<PolyZ> images;
  for (int k = 1; k <= 5; ++k) images.push_back(PolyZ::monomial(K, {k}, 1));
  // u1 -> beta, u2 -> beta^2 kills u1^2 - u2.
  EXPECT_TRUE(p.substitute(K, images).is_zero());
  images.pop_back();
  EXPECT_TRUE(ThrowsCode([&] { p.substitute(K, images); }, ErrorCode::MissingImage));
}

TEST(Polynomials, RationalConversions) {
  auto L = GeneratorSystem::lazard();
  PolyZ p = parse_z(L, "6*u1 - 2*u2");
  EXPECT_EQ(to_integer(to_rational(p)), p);
  PolyQ half = parse_q(L, "1/2*u1");
  EXPECT_TRUE(ThrowsCode([&] { to_integer(half); }, ErrorCode::DenominatorNotCleared));
}

TEST(Parsing, AcceptsCanonicalForms) {
  auto L = GeneratorSystem::lazard();
  EXPECT_TRUE(parse_z(L, "0").is_zero());
  EXPECT_EQ(parse_z(L, "1"), PolyZ::one(L));
  EXPECT_EQ(parse_z(L, "-4*u1^5 + 2*u1^3*u2 - 6*u5"),
            PolyZ::monomial(L, {5, 0, 0, 0, 0}, -4) + PolyZ::monomial(L, {3, 1, 0, 0, 0}, 2) +
                PolyZ::monomial(L, {0, 0, 0, 0, 1}, -6));
  EXPECT_EQ(parse_q(L, "45/2*u1 - u2"),
            PolyQ::monomial(L, {1, 0, 0, 0, 0}, Rat(45, 2)) +
                PolyQ::monomial(L, {0, 1, 0, 0, 0}, Rat(-1)));
  EXPECT_TRUE(ThrowsCode([&] { parse_z(L, "u7"); }, ErrorCode::InvalidInput));
  EXPECT_TRUE(ThrowsCode([&] { parse_z(L, "1/2*u1"); }, ErrorCode::InvalidInput));
}

TEST(Rendering, PolynomialsRoundTripThroughText) {
  auto L = GeneratorSystem::lazard();
  const char* cases[] = {
      "0",
      "1",
      "-1",
      "u1",
      "-u1",
      "2898*u1^5 - 4063*u1^3*u2 + 2012*u1*u2^2 + 2765*u1^2*u3 - 1204*u2*u3 - 385*u1*u4 + 461*u5",
      "-2*u1^3 + u1*u2 - u3",
  };
  for (const char* text : cases) EXPECT_EQ(to_text(parse_z(L, text)), text);
  EXPECT_EQ(to_text(parse_q(GeneratorSystem::pbasis(), "45/2*p1^3 - 30*p1*p2 + 17/2*p3")),
            "45/2*p1^3 - 30*p1*p2 + 17/2*p3");
}

TEST(Rendering, Latex) {
  auto L = GeneratorSystem::lazard();
  EXPECT_EQ(to_latex(parse_z(L, "-2*u1^3 + u1*u2 - u3")), "-2u_1^3+u_1u_2-u_3");
  EXPECT_EQ(to_latex(parse_z(GeneratorSystem::kbeta(), "7*beta^4")), "7\\beta^4");
  EXPECT_EQ(to_latex(parse_q(GeneratorSystem::pbasis(), "-3031/2*p1^5 + p2")),
            "-\\frac{3031}{2}p_1^5+p_2");
}

}  // namespace
}  // namespace m0n
