#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <thread>

#include "m0n/moduli.hpp"
#include "m0n/parse.hpp"
#include "m0n/reference_data.hpp"
#include "m0n/render.hpp"
#include "test_support.hpp"

namespace m0n {
namespace {

TEST(Divisors, EnumerationInvariants) {
  // 2^{n-1} - n - 1 splittings with both sides of size >= 2.
  EXPECT_EQ(enumerate_divisors(4).size(), 3u);
  EXPECT_EQ(enumerate_divisors(5).size(), 10u);
  EXPECT_EQ(enumerate_divisors(6).size(), 25u);
  EXPECT_EQ(enumerate_divisors(7).size(), 56u);
  for (int n = 4; n <= 7; ++n) {
    std::set<std::vector<int>> seen;
    for (const auto& d : enumerate_divisors(n)) {
      EXPECT_GE(d.side.size(), 2u);
      EXPECT_GE(d.complement.size(), 2u);
      EXPECT_EQ(d.side.size() + d.complement.size(), static_cast<std::size_t>(n));
      // The representative side holds at most one of the markings {1,2,3},
      // which picks one side of each unordered splitting exactly once.
      int low = 0;
      for (int x : d.side)
        if (x <= 3) ++low;
      EXPECT_LE(low, 1);
      std::vector<int> all(d.side);
      all.insert(all.end(), d.complement.begin(), d.complement.end());
      std::sort(all.begin(), all.end());
      for (int k = 0; k < n; ++k) EXPECT_EQ(all[k], k + 1);
      EXPECT_TRUE(seen.insert(d.side).second) << "duplicate splitting";
    }
  }
}

TEST(Recursion, ReproducesTheUniversalTable) {
  auto L = GeneratorSystem::lazard();
  for (const auto& row : reference::psi_table()) {
    PolyZ got = psi_intersection(row.n, row.d, universal_theory());
    EXPECT_EQ(got, parse_z(L, row.value)) << "n=" << row.n;
    int total = 0;
    for (int x : row.d) total += x;
    EXPECT_TRUE(got.is_homogeneous_of(row.n - 3 - total));
  }
}

TEST(Recursion, SpotValues) {
  auto L = GeneratorSystem::lazard();
  EXPECT_EQ(m0n_class(4, universal_theory()), parse_z(L, "u1"));
  EXPECT_EQ(m0n_class(5, universal_theory()), parse_z(L, "4*u1^2 - 3*u2"));
  EXPECT_EQ(psi_intersection(8, {2, 1}, universal_theory()),
            parse_z(L, "100*u1^2 - 95*u2"));
  // Exponent order and explicit zeros must not matter.
  EXPECT_EQ(psi_intersection(8, {0, 1, 2, 0}, universal_theory()),
            psi_intersection(8, {2, 1}, universal_theory()));
}

TEST(Recursion, LabelingIndependence) {
  const Theory& U = universal_theory();
  struct Sample {
    int n;
    std::vector<int> exps;
    int forget;
  };
  const std::vector<Sample> samples = {
      {6, {2, 0, 0, 0, 0, 0}, 5}, {6, {0, 0, 0, 2, 0, 0}, 0}, {6, {0, 0, 2, 0, 0, 0}, 1},
      {7, {2, 1, 0, 0, 0, 0, 0}, 6}, {7, {0, 1, 0, 0, 2, 0, 0}, 3},
      {7, {0, 0, 0, 1, 0, 0, 2}, 0},
      {8, {2, 1, 1, 0, 0, 0, 0, 0}, 7}, {8, {0, 1, 0, 2, 0, 1, 0, 0}, 2},
  };
  for (const auto& s : samples) {
    std::vector<int> d;
    for (int x : s.exps)
      if (x > 0) d.push_back(x);
    PolyZ canonical = psi_intersection(s.n, d, U);
    EXPECT_EQ(psi_intersection_via_marking(s.n, s.exps, s.forget, U), canonical)
        << "n=" << s.n << " forget=" << s.forget;
  }
  EXPECT_TRUE(ThrowsCode(
      [&] { psi_intersection_via_marking(6, {2, 0, 0, 0, 0, 0}, 0, U); },
      ErrorCode::InvalidInput));  // forgotten marking carries a psi power
}

TEST(Recursion, VanishingAndGates) {
  const Theory& U = universal_theory();
  // Dimension vanishing applies before the data-window gate: these involve
  // spaces beyond n=8 but are zero on dimension grounds alone.
  EXPECT_TRUE(psi_intersection(9, {6, 1}, U).is_zero());
  EXPECT_TRUE(psi_intersection(12, {20}, U).is_zero());
  EXPECT_TRUE(psi_intersection(5, {3}, U).is_zero());
  EXPECT_TRUE(ThrowsCode([&] { psi_intersection(9, {}, U); }, ErrorCode::UnknownCoefficients));
  EXPECT_TRUE(ThrowsCode([&] { psi_intersection(2, {}, U); }, ErrorCode::InvalidInput));
  EXPECT_TRUE(ThrowsCode([&] { psi_intersection(6, {-1}, U); }, ErrorCode::InvalidInput));
  EXPECT_TRUE(ThrowsCode([&] { psi_intersection(3, {0, 0, 0, 0}, U); },
                         ErrorCode::InvalidInput));
  EXPECT_EQ(psi_intersection(3, {}, U), PolyZ::one(U.system));
}

TEST(Specializations, MatchClosedForms) {
  auto K = GeneratorSystem::kbeta();
  for (const auto& row : reference::chow_table()) {
    PolyZ got = psi_intersection(row.n, row.d, chow_theory());
    EXPECT_EQ(got, PolyZ::constant(GeneratorSystem::empty(), row.value));
    EXPECT_EQ(got, chow_closed_form(row.n, row.d));
  }
  for (const auto& row : reference::ktheory_table())
    EXPECT_EQ(psi_intersection(row.n, row.d, ktheory_theory()), parse_z(K, row.value));

  // The additive theory kills everything below top degree.
  EXPECT_TRUE(psi_intersection(6, {1, 1}, chow_theory()).is_zero());
  EXPECT_EQ(psi_intersection(6, {1, 1, 1}, chow_theory()),
            chow_closed_form(6, {1, 1, 1}));
  // Closed form sweep against the recursion, n beyond the universal window.
  for (int n = 3; n <= 10; ++n) {
    EXPECT_EQ(m0n_class(n, chow_theory()),
              chow_closed_form(n, {}));
    EXPECT_EQ(psi_intersection(n, {n - 3}, chow_theory()),
              chow_closed_form(n, {n - 3}));
  }
}

TEST(Specializations, SubstitutionCommutesWithTheRecursion) {
  // Spot form of the coherence square: specialize the universal answer vs
  // run the specialized recursion. (The verification suite sweeps all keys.)
  const std::vector<std::pair<int, std::vector<int>>> keys = {
      {6, {}}, {7, {1}}, {8, {2, 1}}, {8, {1, 1, 1, 1, 1}}};
  for (const auto& [n, d] : keys) {
    PolyZ uni = psi_intersection(n, d, universal_theory());
    EXPECT_EQ(uni.substitute(GeneratorSystem::kbeta(), ktheory_generator_images()),
              psi_intersection(n, d, ktheory_theory()))
        << "n=" << n;
    EXPECT_EQ(uni.substitute(GeneratorSystem::empty(), chow_generator_images()),
              psi_intersection(n, d, chow_theory()))
        << "n=" << n;
  }
}

TEST(TwistedClasses, RecursionAgreesWithClosedForm) {
  auto K = GeneratorSystem::kbeta();
  for (const auto& row : reference::ktheory_twisted_table()) {
    EXPECT_EQ(ktheory_twisted_closed_form(row.n, row.d), parse_z(K, row.value));
    EXPECT_EQ(ktheory_twisted_recursion(row.n, row.d), parse_z(K, row.value));
  }
  IntersectionCache cache;
  for (int n = 3; n <= 9; ++n)
    for (int a = 0; a <= n - 3; ++a)
      for (int b = 0; a + b <= n - 3; ++b)
        EXPECT_EQ(ktheory_twisted_recursion(n, {a, b}, &cache),
                  ktheory_twisted_closed_form(n, {a, b}))
            << n << " " << a << " " << b;
  EXPECT_TRUE(ktheory_twisted_closed_form(5, {4}).is_zero());
}

TEST(Caching, KeysSeparateTheoriesAndValuesRoundTrip) {
  IntersectionCache cache;
  PolyZ u = psi_intersection(6, {1, 1, 1}, universal_theory(), &cache);
  PolyZ c = psi_intersection(6, {1, 1, 1}, chow_theory(), &cache);
  EXPECT_EQ(u.system(), GeneratorSystem::lazard());
  EXPECT_EQ(c.system(), GeneratorSystem::empty());
  auto counts = cache.count_by_theory();
  EXPECT_GT(counts["universal"], 0u);
  EXPECT_GT(counts["chow"], 0u);

  IntersectionKey key{6, {1, 1, 1}, "universal"};
  auto hit = cache.lookup(key);
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(*hit, u);
  EXPECT_FALSE(cache.lookup({17, {1}, "universal"}).has_value());
  cache.clear();
  EXPECT_EQ(cache.size(), 0u);
}

TEST(Caching, FreshAndWarmCachesAgree) {
  IntersectionCache warm;
  PolyZ first = psi_intersection(8, {1, 1}, universal_theory(), &warm);
  std::size_t filled = warm.size();
  EXPECT_GT(filled, 0u);
  // Second evaluation is a pure lookup and must not grow the cache.
  EXPECT_EQ(psi_intersection(8, {1, 1}, universal_theory(), &warm), first);
  EXPECT_EQ(warm.size(), filled);
  IntersectionCache fresh;
  EXPECT_EQ(psi_intersection(8, {1, 1}, universal_theory(), &fresh), first);
}

TEST(Caching, ConcurrentEvaluationIsDeterministic) {
  const std::vector<std::pair<int, std::vector<int>>> keys = {
      {8, {}}, {8, {1}}, {8, {2, 1}}, {7, {1, 1}}};
  std::vector<PolyZ> expected;
  for (const auto& [n, d] : keys) {
    IntersectionCache solo;
    expected.push_back(psi_intersection(n, d, universal_theory(), &solo));
  }
  IntersectionCache shared;
  std::vector<std::vector<PolyZ>> got(4);
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&, t] {
      for (const auto& [n, d] : keys)
        got[t].push_back(psi_intersection(n, d, universal_theory(), &shared));
    });
  }
  for (auto& w : workers) w.join();
  for (int t = 0; t < 4; ++t) {
    ASSERT_EQ(got[t].size(), keys.size());
    for (std::size_t k = 0; k < keys.size(); ++k)
      EXPECT_EQ(got[t][k], expected[k]) << "thread " << t << " key " << k;
  }
}

}  // namespace
}  // namespace m0n
