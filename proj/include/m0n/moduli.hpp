#pragma once

#include <algorithm>
#include <climits>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "m0n/fgl.hpp"

namespace m0n {

// ---------------------------------------------------------------------------
// Keys and caching
// ---------------------------------------------------------------------------

// Exponent multisets are stored canonically: sorted descending, trailing
// zeros removed.  Together with n and the theory name this identifies an
// intersection number uniquely.
inline std::vector<int> canonical_exponents(std::vector<int> d) {
  std::sort(d.begin(), d.end(), std::greater<int>());
  while (!d.empty() && d.back() == 0) d.pop_back();
  return d;
}

struct IntersectionKey {
  int n = 0;
  std::vector<int> d;  // canonical
  std::string theory;

  auto operator<=>(const IntersectionKey&) const = default;
};

// Synchronized memo table; safe to share between threads and across runs via
// the JSON loader/saver (see json_io.hpp).  Values are exact polynomial
// classes over the theory's coefficient system.
class IntersectionCache {
 public:
  std::optional<PolyZ> lookup(const IntersectionKey& key) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  void store(const IntersectionKey& key, const PolyZ& value) {
    std::lock_guard<std::mutex> lock(mutex_);
    map_.emplace(key, value);
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return map_.size();
  }

  std::map<std::string, std::size_t> count_by_theory() const {
    std::lock_guard<std::mutex> lock(mutex_);
    std::map<std::string, std::size_t> out;
    for (const auto& [k, v] : map_) ++out[k.theory];
    return out;
  }

  std::vector<std::pair<IntersectionKey, PolyZ>> entries() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return {map_.begin(), map_.end()};
  }

  void clear() {
    std::lock_guard<std::mutex> lock(mutex_);
    map_.clear();
  }

 private:
  mutable std::mutex mutex_;
  std::map<IntersectionKey, PolyZ> map_;
};

// ---------------------------------------------------------------------------
// Theories
// ---------------------------------------------------------------------------

// A theory is everything the recursion needs: the scalar coefficients c_j and
// b_ij, the class of the line p1, and the window in which they are known.
// For the universal theory the window is hard (requests beyond it raise
// UnknownCoefficients); for the additive and multiplicative laws the derived
// series are eventually zero, so the tail is exact and requests never fail.
struct Theory {
  std::string name;
  SystemPtr system;
  PolyZ p1;
  std::vector<PolyZ> c;                            // c_0 .. c_{c_known}
  std::map<std::pair<int, int>, PolyZ> b;          // nonzero coefficients
  int b_known_through;  // i+j <= this is trustworthy data (INT_MAX if exact)
  bool tail_exact;      // absent c_j / b_ij beyond the window are genuinely zero
  int max_n;            // largest n the theory can evaluate

  PolyZ c_at(int j) const {
    if (j < static_cast<int>(c.size())) return c[j];
    if (tail_exact) return PolyZ::zero(system);
    fail(ErrorCode::UnknownCoefficients,
         "c_" + std::to_string(j) + " lies outside the reliable window of theory '" + name + "'");
  }

  PolyZ b_at(int i, int j) const {
    auto it = b.find({i, j});
    if (it != b.end()) return it->second;
    if (tail_exact || i + j <= b_known_through) return PolyZ::zero(system);
    fail(ErrorCode::UnknownCoefficients,
         "b_" + std::to_string(i) + std::to_string(j) + " lies outside the reliable window of theory '" +
             name + "'");
  }

  bool b_is_zero() const { return b.empty() && tail_exact; }
};

namespace detail {
inline Theory theory_from_bundle(std::string name, const BundleZ& bundle, int max_n,
                                 bool tail_exact) {
  Theory t{std::move(name), bundle.system(), bundle.p1, bundle.c, {}, 0, tail_exact, max_n};
  for (const auto& [ij, p] : bundle.b_ij) t.b.emplace(ij, p);
  int cap = bundle.law.F.weight_cap();
  t.b_known_through = tail_exact ? INT_MAX : (cap >= 0 ? cap - 2 : INT_MAX);
  return t;
}
}  // namespace detail

// The universal theory: values are classes over u1..u5, complete for n <= 8.
inline const Theory& universal_theory() {
  static const Theory t = detail::theory_from_bundle("universal", universal_bundle(), 8, false);
  return t;
}

// Additive specialization: psi-monomial integrals of top degree survive as
// integers, everything else dies.
inline const Theory& chow_theory() {
  static const Theory t =
      detail::theory_from_bundle("chow", derive_bundle(additive_law()), INT_MAX - 1, true);
  return t;
}

// Multiplicative specialization over Z[beta].
inline const Theory& ktheory_theory() {
  static const Theory t =
      detail::theory_from_bundle("ktheory", derive_bundle(multiplicative_law()), INT_MAX - 1, true);
  return t;
}

inline const Theory& theory_by_name(const std::string& name) {
  if (name == "universal") return universal_theory();
  if (name == "chow") return chow_theory();
  if (name == "ktheory") return ktheory_theory();
  fail(ErrorCode::InvalidInput, "unknown theory '" + name + "'");
}

// ---------------------------------------------------------------------------
// Boundary-divisor enumeration
// ---------------------------------------------------------------------------

// One two-sided degeneration of a curve with markings 1..n: the markings of
// `side` move onto one component, `complement` stays on the other; each side
// also carries one node (the "bullet").
struct DivisorDatum {
  std::vector<int> side;        // 1-based marking labels, ascending
  std::vector<int> complement;  // the rest
};

// All boundary splittings {T, T^c} of markings 1..n with both sides of size
// >= 2, each unordered pair listed exactly once: the representative is the
// side containing at most one of the markings {1,2,3}.
inline std::vector<DivisorDatum> enumerate_divisors(int n) {
  if (n < 0 || n > 30) fail(ErrorCode::InvalidInput, "marking count out of range");
  std::vector<DivisorDatum> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size < 2 || n - size < 2) continue;
    if (__builtin_popcount(mask & 0x7u) > 1) continue;
    DivisorDatum d;
    for (int k = 0; k < n; ++k)
      (mask >> k & 1 ? d.side : d.complement).push_back(k + 1);
    out.push_back(std::move(d));
  }
  return out;
}

// ---------------------------------------------------------------------------
// The intersection recursion
// ---------------------------------------------------------------------------

namespace detail {

class IntersectionEngine {
 public:
  IntersectionEngine(const Theory& theory, IntersectionCache& cache)
      : theory_(theory), cache_(cache) {}

  PolyZ value(int n, const std::vector<int>& d_in) {
    std::vector<int> d = canonical_exponents(d_in);
    int total = 0;
    for (int x : d) {
      if (x < 0) fail(ErrorCode::InvalidInput, "negative psi exponent");
      total += x;
    }
    if (n < 3) fail(ErrorCode::InvalidInput, "need at least three markings");
    if (static_cast<int>(d_in.size()) > n)
      fail(ErrorCode::InvalidInput, "more psi exponents than markings");
    if (total > n - 3) return PolyZ::zero(theory_.system);  // dimension vanishing
    if (n > theory_.max_n)
      fail(ErrorCode::UnknownCoefficients,
           "theory '" + theory_.name + "' is reliable only for n <= " + std::to_string(theory_.max_n));
    if (n == 3) return PolyZ::one(theory_.system);

    IntersectionKey key{n, d, theory_.name};
    if (auto hit = cache_.lookup(key)) return *hit;
    // Recurse via the forgetful map: the last marking carries no psi class
    // (guaranteed: |d| <= n-3 < n-1 slots).
    std::vector<int> slots(d);
    slots.resize(n - 1, 0);
    PolyZ result = recursion_rhs(n, slots);
    cache_.store(key, result);
    return result;
  }

  // Right-hand side of the recursion for the integral over n markings whose
  // first n-1 markings carry `slots` and whose n-th (forgotten) marking
  // carries none.  Exposed with an explicit labeling so independence of the
  // labeling can be tested; `value` always calls it with the canonical one.
  PolyZ recursion_rhs(int n, const std::vector<int>& slots) {
    int m = n - 1;  // retained markings
    if (static_cast<int>(slots.size()) != m)
      fail(ErrorCode::InvalidInput, "slot vector must cover the retained markings");
    int total = 0;
    for (int x : slots) total += x;

    // Term 1: the class of the line times the integral with the same powers.
    PolyZ result = theory_.p1 * value(m, slots);

    // Term 2: -sum_i sum_j c_j <psi_i^{d_i-1+j} ...>; j is bounded by the
    // dimension of the smaller space, beyond which every summand vanishes.
    for (int i = 0; i < m; ++i) {
      if (slots[i] == 0) continue;
      std::vector<int> adjusted(slots);
      for (int j = 0; j + total - 1 <= m - 3; ++j) {
        adjusted[i] = slots[i] - 1 + j;
        result -= theory_.c_at(j) * value(m, adjusted);
      }
    }

    // Term 3: boundary corrections, one per splitting of the retained
    // markings, weighted by the b-coefficients of the bullet powers.
    if (!theory_.b_is_zero()) {
      for (unsigned mask = 0; mask < (1u << m); ++mask) {
        int size = __builtin_popcount(mask);
        if (size < 2 || m - size < 2) continue;
        if (__builtin_popcount(mask & 0x7u) > 1) continue;
        std::vector<int> inside, outside;
        int sum_in = 0, sum_out = 0;
        for (int k = 0; k < m; ++k) {
          if (mask >> k & 1) {
            inside.push_back(slots[k]);
            sum_in += slots[k];
          } else {
            outside.push_back(slots[k]);
            sum_out += slots[k];
          }
        }
        // Bullet exponents beyond the factor's dimension give zero.
        int imax = (size + 1) - 3 - sum_in;
        int jmax = (m - size + 1) - 3 - sum_out;
        for (int i = 0; i <= imax; ++i) {
          inside.push_back(i);
          PolyZ left = value(size + 1, inside);
          inside.pop_back();
          if (left.is_zero()) continue;
          for (int j = 0; j <= jmax; ++j) {
            PolyZ bij = theory_.b_at(i, j);
            if (bij.is_zero()) continue;
            outside.push_back(j);
            PolyZ right = value(m - size + 1, outside);
            outside.pop_back();
            result += bij * left * right;
          }
        }
      }
    }
    return result;
  }

 private:
  const Theory& theory_;
  IntersectionCache& cache_;
};

inline IntersectionCache& shared_cache() {
  static IntersectionCache cache;
  return cache;
}

}  // namespace detail

// The psi-monomial integral over the moduli space of stable n-pointed genus-0
// curves, as a class over the theory's coefficient system.
inline PolyZ psi_intersection(int n, const std::vector<int>& d, const Theory& theory,
                              IntersectionCache* cache = nullptr) {
  detail::IntersectionEngine engine(theory, cache ? *cache : detail::shared_cache());
  return engine.value(n, d);
}

// The full class of the space itself (no psi factors).
inline PolyZ m0n_class(int n, const Theory& theory, IntersectionCache* cache = nullptr) {
  return psi_intersection(n, {}, theory, cache);
}

// Test hook: evaluate the recursion with an explicit marking labeling,
// forgetting the given zero-exponent slot.  Mathematically the result cannot
// depend on either choice; tests exercise that.
inline PolyZ psi_intersection_via_marking(int n, const std::vector<int>& exponents,
                                          int forget_index, const Theory& theory,
                                          IntersectionCache* cache = nullptr) {
  if (static_cast<int>(exponents.size()) != n)
    fail(ErrorCode::InvalidInput, "need one exponent per marking");
  if (forget_index < 0 || forget_index >= n || exponents[forget_index] != 0)
    fail(ErrorCode::InvalidInput, "forgotten marking must exist and carry no psi class");
  if (n < 4) fail(ErrorCode::InvalidInput, "recursion step needs n >= 4");
  std::vector<int> slots;
  for (int k = 0; k < n; ++k)
    if (k != forget_index) slots.push_back(exponents[k]);
  int total = 0;
  for (int x : slots) total += x;
  if (total > n - 3) return PolyZ::zero(theory.system);
  if (n > theory.max_n)
    fail(ErrorCode::UnknownCoefficients, "beyond the theory's reliable range");
  detail::IntersectionEngine engine(theory, cache ? *cache : detail::shared_cache());
  return engine.recursion_rhs(n, slots);
}

// ---------------------------------------------------------------------------
// Closed forms and the twisted multiplicative recursion
// ---------------------------------------------------------------------------

inline void validate_nd(int n, const std::vector<int>& d) {
  if (n < 3) fail(ErrorCode::InvalidInput, "need at least three markings");
  if (static_cast<int>(d.size()) > n)
    fail(ErrorCode::InvalidInput, "more psi exponents than markings");
  for (int x : d)
    if (x < 0) fail(ErrorCode::InvalidInput, "negative psi exponent");
}

// Additive theory in closed form: the multinomial coefficient in top degree,
// zero otherwise.
inline PolyZ chow_closed_form(int n, const std::vector<int>& d) {
  validate_nd(n, d);
  auto sys = GeneratorSystem::empty();
  int total = 0;
  for (int x : d) total += x;
  if (total != n - 3) return PolyZ::zero(sys);
  return PolyZ::constant(sys, multinomial(d.begin(), d.end()));
}

// Twisted psi classes in the multiplicative theory satisfy a one-line
// forgetful recursion; closed form
//   beta^{n-3-|d|} (n-3)! / ((n-3-|d|)! prod d_i!).
inline PolyZ ktheory_twisted_closed_form(int n, const std::vector<int>& d) {
  validate_nd(n, d);
  auto sys = GeneratorSystem::kbeta();
  int total = 0;
  for (int x : d) total += x;
  if (total > n - 3) return PolyZ::zero(sys);
  std::vector<int> parts(d);
  parts.push_back(n - 3 - total);
  Int count = multinomial(parts.begin(), parts.end());
  return PolyZ::monomial(sys, {n - 3 - total}, count);
}

// The same numbers by recursion (memoized); the agreement of the two routes
// is part of the verification suite.
inline PolyZ ktheory_twisted_recursion(int n, const std::vector<int>& d_in,
                                       IntersectionCache* cache = nullptr) {
  validate_nd(n, d_in);
  auto sys = GeneratorSystem::kbeta();
  std::vector<int> d = canonical_exponents(d_in);
  int total = 0;
  for (int x : d) total += x;
  if (total > n - 3) return PolyZ::zero(sys);
  if (n == 3) return PolyZ::one(sys);
  IntersectionKey key{n, d, "ktheory-twisted"};
  IntersectionCache& memo = cache ? *cache : detail::shared_cache();
  if (auto hit = memo.lookup(key)) return *hit;
  PolyZ beta = PolyZ::generator(sys, 0);
  PolyZ result = beta * ktheory_twisted_recursion(n - 1, d, cache);
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::vector<int> lowered(d);
    lowered[i] -= 1;
    result += ktheory_twisted_recursion(n - 1, lowered, cache);
  }
  memo.store(key, result);
  return result;
}

}  // namespace m0n
