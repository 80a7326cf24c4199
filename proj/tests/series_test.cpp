#include <gtest/gtest.h>

#include "m0n/parse.hpp"
#include "m0n/render.hpp"
#include "test_support.hpp"

namespace m0n {
namespace {

SeriesZ geometric(int order) {
  // 1 + x + x^2 + ... + x^order
  auto L = GeneratorSystem::lazard();
  SeriesZ s = SeriesZ::zero(L, vars_x(), order);
  for (int k = 0; k <= order; ++k) s.add_term({k}, PolyZ::one(L));
  return s;
}

TEST(Series, FactoriesAndAccess) {
  auto L = GeneratorSystem::lazard();
  SeriesZ x = SeriesZ::variable(L, vars_x(), "x", 4);
  EXPECT_EQ(x.order(), 4);
  EXPECT_EQ(x.coefficient_at(1), PolyZ::one(L));
  EXPECT_TRUE(x.coefficient_at(0).is_zero());
  EXPECT_TRUE(x.constant_term().is_zero());
  EXPECT_EQ(x.valuation(), std::optional<int>(1));
  EXPECT_EQ(SeriesZ::zero(L, vars_x(), 3).valuation(), std::nullopt);

  SeriesZ c = SeriesZ::from_polynomial(parse_z(L, "u1^2 - u2"), vars_xy(), 2);
  EXPECT_EQ(c.constant_term(), parse_z(L, "u1^2 - u2"));
  EXPECT_TRUE(ThrowsCode([&] { c.coefficient_at(0); }, ErrorCode::VariableMismatch));
  EXPECT_TRUE(ThrowsCode([&] { SeriesZ::variable(L, vars_x(), "y", 3); },
                         ErrorCode::VariableMismatch));
}

TEST(Series, OrderTracksTheLeastInformedOperand) {
  auto L = GeneratorSystem::lazard();
  SeriesZ a = geometric(5);
  SeriesZ b = geometric(3);
  EXPECT_EQ((a + b).order(), 3);
  EXPECT_EQ((a * b).order(), 3);
  EXPECT_EQ(a.truncated_to(2).order(), 2);
  EXPECT_EQ(a.truncated_to(9).order(), 5);  // truncation never invents terms
  // A polynomial is complete at every order, so extension is sound there.
  SeriesZ x = SeriesZ::variable(L, vars_x(), "x", 2);
  EXPECT_EQ(x.extended_to(7).order(), 7);
  EXPECT_EQ(x.extended_to(7).coefficient_at(1), PolyZ::one(L));
}

TEST(Series, WeightCapActsAsQuotientMap) {
  auto L = GeneratorSystem::lazard();
  SeriesZ x = SeriesZ::variable(L, vars_x(), "x", 6);
  PolyZ u1 = PolyZ::generator(L, 0);
  SeriesZ s = x * u1 + x * x * parse_z(L, "u2 + u1^2");
  // Dropping weights above 1 removes the whole x^2 coefficient.
  SeriesZ capped = s.with_weight_cap(1);
  EXPECT_EQ(capped.coefficient_at(1), u1);
  EXPECT_TRUE(capped.coefficient_at(2).is_zero());
  // Quotient-map property: cap(a*b) == cap(cap(a)*cap(b)).
  SeriesZ t = x * parse_z(L, "u1 + u3") + x * x * x * parse_z(L, "u2^2");
  for (int cap = 0; cap <= 6; ++cap) {
    SeriesZ lhs = (s * t).with_weight_cap(cap);
    SeriesZ rhs = s.with_weight_cap(cap) * t.with_weight_cap(cap);
    EXPECT_EQ(lhs, rhs.with_weight_cap(cap)) << "cap " << cap;
  }
}

TEST(Series, UnitInversion) {
  auto L = GeneratorSystem::lazard();
  SeriesZ one = SeriesZ::from_polynomial(PolyZ::one(L), vars_x(), 5);
  SeriesZ x = SeriesZ::variable(L, vars_x(), "x", 5);
  SeriesZ inv = (one - x).invert_unit();
  EXPECT_EQ(inv, geometric(5));
  EXPECT_EQ((one - x) * inv, one);

  SeriesZ two = SeriesZ::from_polynomial(PolyZ::constant(L, 2), vars_x(), 5);
  EXPECT_TRUE(ThrowsCode([&] { two.invert_unit(); }, ErrorCode::NonUnitConstantTerm));
  SeriesZ u1s = SeriesZ::from_polynomial(PolyZ::generator(L, 0), vars_x(), 5);
  EXPECT_TRUE(ThrowsCode([&] { u1s.invert_unit(); }, ErrorCode::NonUnitConstantTerm));

  // Over Q any nonzero rational constant is invertible.
  SeriesQ half = SeriesQ::from_polynomial(PolyQ::constant(L, Rat(1, 2)), vars_x(), 3);
  EXPECT_EQ(half.invert_unit().constant_term(), PolyQ::constant(L, Rat(2)));
}

TEST(Series, ExactDivision) {
  auto L = GeneratorSystem::lazard();
  SeriesZ x = SeriesZ::variable(L, vars_xy(), "x", 5);
  SeriesZ y = SeriesZ::variable(L, vars_xy(), "y", 5);
  SeriesZ q = (x * x - y * y).exact_divide(x - y);
  EXPECT_EQ(q, (x + y).truncated_to(4));
  EXPECT_EQ(q.order(), 4);  // valuation-1 divisor costs one order

  SeriesZ x1 = SeriesZ::variable(L, vars_x(), "x", 5);
  PolyZ u1 = PolyZ::generator(L, 0);
  SeriesZ num = x1 + x1 * x1 * u1;
  SeriesZ quot = num.exact_divide(x1);
  EXPECT_EQ(quot.constant_term(), PolyZ::one(L));
  EXPECT_EQ(quot.coefficient_at(1), u1);

  EXPECT_TRUE(ThrowsCode([&] { x.exact_divide(SeriesZ::zero(L, vars_xy(), 5)); },
                         ErrorCode::DivisionNotExact));
  EXPECT_TRUE(ThrowsCode([&] { x.exact_divide(y); }, ErrorCode::DivisionNotExact));
  EXPECT_TRUE(ThrowsCode(
      [&] {
        SeriesZ one = SeriesZ::from_polynomial(PolyZ::one(L), vars_xy(), 5);
        one.exact_divide(x - y);
      },
      ErrorCode::DivisionNotExact));
  // Divisor with non-invertible leading constant.
  SeriesZ twox = x * PolyZ::constant(L, 2);
  EXPECT_TRUE(ThrowsCode([&] { twox.exact_divide(twox); }, ErrorCode::DivisionNotExact));
}

TEST(Series, Composition) {
  auto L = GeneratorSystem::lazard();
  SeriesZ x = SeriesZ::variable(L, vars_x(), "x", 4);
  PolyZ u1 = PolyZ::generator(L, 0);
  SeriesZ s = x + x * x * u1;

  SeriesZ y = SeriesZ::variable(L, vars_xy(), "y", 4);
  SeriesZ z = SeriesZ::variable(L, vars_xy(), "x", 4);
  SeriesZ sub = s.compose({{"x", z + y}});
  // (x+y) + u1 (x+y)^2, expanded.
  EXPECT_EQ(sub.coefficient({1, 0}), PolyZ::one(L));
  EXPECT_EQ(sub.coefficient({1, 1}), u1 * Int(2));
  EXPECT_EQ(sub.coefficient({0, 2}), u1);

  EXPECT_TRUE(ThrowsCode([&] { s.compose({{"y", y}}); }, ErrorCode::MissingImage));
  SeriesZ shifted = y + SeriesZ::from_polynomial(PolyZ::one(L), vars_xy(), 4);
  EXPECT_TRUE(ThrowsCode([&] { s.compose({{"x", shifted}}); },
                         ErrorCode::NonzeroConstantSubstitution));
}

TEST(Series, Reversion) {
  auto L = GeneratorSystem::lazard();
  SeriesZ x = SeriesZ::variable(L, vars_x(), "x", 6);
  // f = x/(1+x) = x - x^2 + x^3 - ...; its inverse is x/(1-x).
  SeriesZ f = SeriesZ::zero(L, vars_x(), 6);
  for (int k = 1; k <= 6; ++k) f.add_term({k}, PolyZ::constant(L, (k % 2) ? 1 : -1));
  SeriesZ g = f.revert();
  for (int k = 1; k <= 6; ++k) EXPECT_EQ(g.coefficient_at(k), PolyZ::one(L));
  EXPECT_EQ(f.compose({{"x", g}}), x);
  EXPECT_EQ(g.compose({{"x", f}}), x);

  // Generic coefficients: composing with the reversion recovers the identity.
  SeriesZ s = x + x.pow(2) * PolyZ::generator(L, 0) + x.pow(3) * PolyZ::generator(L, 1);
  EXPECT_EQ(s.compose({{"x", s.revert()}}), x);

  EXPECT_TRUE(ThrowsCode([&] { (x * PolyZ::constant(L, 2)).revert(); },
                         ErrorCode::NotReversible));
  EXPECT_TRUE(ThrowsCode(
      [&] { (x + SeriesZ::from_polynomial(PolyZ::one(L), vars_x(), 6)).revert(); },
      ErrorCode::NotReversible));
}

TEST(Series, CalculusRoundTrip) {
  auto L = GeneratorSystem::lazard();
  SeriesQ x = SeriesQ::variable(L, vars_x(), "x", 5);
  SeriesQ s = x + x.pow(3) * PolyQ::generator(L, 1);
  SeriesQ ds = s.derivative("x");
  EXPECT_EQ(ds.constant_term(), PolyQ::one(L));
  EXPECT_EQ(ds.coefficient_at(2), PolyQ::generator(L, 1) * Rat(3));
  EXPECT_EQ(ds.antiderivative("x"), s.truncated_to(ds.order() + 1));

  // Over Z the antiderivative of x needs to divide by 2.
  SeriesZ xz = SeriesZ::variable(L, vars_x(), "x", 3);
  EXPECT_TRUE(ThrowsCode([&] { xz.antiderivative("x"); }, ErrorCode::DenominatorNotCleared));
}

TEST(Series, CombinedDegreeDetection) {
  auto L = GeneratorSystem::lazard();
  SeriesZ x = SeriesZ::variable(L, vars_x(), "x", 4);
  // x + u1 x^2 + u1^2 x^3: every term has variable degree - weight == 1.
  SeriesZ s = x + x.pow(2) * PolyZ::generator(L, 0) + x.pow(3) * parse_z(L, "u1^2");
  EXPECT_EQ(s.combined_degree(), std::optional<int>(1));
  EXPECT_TRUE(s.is_combined_homogeneous_of(1));
  EXPECT_FALSE(s.is_combined_homogeneous_of(0));
  SeriesZ t = s + x;  // adds a combined-degree-1 term at degree 1... still 1
  EXPECT_TRUE(t.is_combined_homogeneous_of(1));
  SeriesZ bad = s + x.pow(2);
  EXPECT_EQ(bad.combined_degree(), std::nullopt);
  EXPECT_TRUE(SeriesZ::zero(L, vars_x(), 4).is_combined_homogeneous_of(17));
}

TEST(Series, CoefficientSubstitutionChangesSystems) {
  auto L = GeneratorSystem::lazard();
  auto K = GeneratorSystem::kbeta();
  SeriesZ x = SeriesZ::variable(L, vars_x(), "x", 3);
  SeriesZ s = x * parse_z(L, "u1") + x.pow(2) * parse_z(L, "u2 - u1^2");
  std::vector<PolyZ> images;
  for (int k = 1; k <= 5; ++k) images.push_back(PolyZ::monomial(K, {k}, 1));
  SeriesZ t = s.substitute_coefficients(K, images);
  EXPECT_EQ(t.system(), K);
  EXPECT_EQ(t.coefficient_at(1), PolyZ::monomial(K, {1}, 1));
  EXPECT_TRUE(t.coefficient_at(2).is_zero());  // beta^2 - beta^2
}

TEST(Series, JetAgreement) {
  auto L = GeneratorSystem::lazard();
  SeriesZ a = geometric(5);
  SeriesZ b = geometric(3) + SeriesZ::variable(L, vars_x(), "x", 3);
  EXPECT_FALSE(a.agrees_with(b));
  SeriesZ c = geometric(3);
  EXPECT_TRUE(a.agrees_with(c));  // compares through the min order only
  EXPECT_FALSE(a == c);           // strict equality also compares orders
}

TEST(Series, TextRendering) {
  auto L = GeneratorSystem::lazard();
  SeriesZ x = SeriesZ::variable(L, vars_x(), "x", 4);
  SeriesZ s = -x - x.pow(2) * parse_z(L, "u1") - x.pow(4) * parse_z(L, "2*u1^3 - u1*u2 + u3");
  EXPECT_EQ(to_text(s), "-x - u1*x^2 + (-2*u1^3 + u1*u2 - u3)*x^4");
  EXPECT_EQ(to_text(SeriesZ::zero(L, vars_x(), 2)), "0");
  SeriesZ with_const = SeriesZ::from_polynomial(PolyZ::constant(L, -1), vars_x(), 2) +
                       x * parse_z(L, "u1");
  EXPECT_EQ(to_text(with_const), "-1 + u1*x");
}

}  // namespace
}  // namespace m0n
