#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "m0n/generator_system.hpp"
#include "m0n/numeric.hpp"

namespace m0n {

using Exponents = std::vector<int>;

// Canonical monomial order used everywhere terms are enumerated: higher total
// exponent degree first, ties broken by ascending lexicographic comparison of
// the exponent vectors.  For homogeneous values over u1..u5 this lists u1^w
// first and u_w last, matching the conventional way such classes are written.
struct MonomialOrder {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a < b;
  }
};

// Sparse polynomial over a generator system.  Invariant: no stored coefficient
// is zero, every exponent vector has the system's length, all entries >= 0.
template <class C>
class GradedPolynomial {
 public:
  using Coeff = C;
  using TermMap = std::map<Exponents, C, MonomialOrder>;

  explicit GradedPolynomial(SystemPtr system) : system_(std::move(system)) {}

  static GradedPolynomial zero(SystemPtr system) { return GradedPolynomial(std::move(system)); }

  static GradedPolynomial constant(SystemPtr system, C value) {
    GradedPolynomial p(std::move(system));
    p.add_term(Exponents(p.system_->size(), 0), std::move(value));
    return p;
  }

  static GradedPolynomial one(SystemPtr system) { return constant(std::move(system), C(1)); }

  static GradedPolynomial generator(SystemPtr system, std::size_t index) {
    GradedPolynomial p(std::move(system));
    if (index >= p.system_->size()) fail(ErrorCode::InvalidInput, "generator index out of range");
    Exponents e(p.system_->size(), 0);
    e[index] = 1;
    p.add_term(std::move(e), C(1));
    return p;
  }

  static GradedPolynomial monomial(SystemPtr system, Exponents exps, C value) {
    GradedPolynomial p(std::move(system));
    p.check_exponents(exps);
    p.add_term(std::move(exps), std::move(value));
    return p;
  }

  const SystemPtr& system() const { return system_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  C coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  // Constant part (coefficient of the empty monomial).
  C constant_term() const { return coefficient(Exponents(system_->size(), 0)); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && term_degree(terms_.begin()->first) == 0);
  }

  void add_term(Exponents exps, C value) {
    check_exponents(exps);
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
      if (!CoeffTraits<C>::is_zero(value)) terms_.emplace(std::move(exps), std::move(value));
    } else {
      it->second += value;
      if (CoeffTraits<C>::is_zero(it->second)) terms_.erase(it);
    }
  }

  GradedPolynomial& operator+=(const GradedPolynomial& o) {
    require_same_system(system_, o.system_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  GradedPolynomial& operator-=(const GradedPolynomial& o) {
    require_same_system(system_, o.system_);
    for (const auto& [e, c] : o.terms_) add_term(e, C(-c));
    return *this;
  }

  friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) {
    a += b;
    return a;
  }

  friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) {
    a -= b;
    return a;
  }

  GradedPolynomial operator-() const {
    GradedPolynomial r(system_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, C(-c));
    return r;
  }

  friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
    require_same_system(a.system_, b.system_);
    GradedPolynomial r(a.system_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        r.add_term(std::move(e), ca * cb);
      }
    }
    return r;
  }

  GradedPolynomial& operator*=(const GradedPolynomial& o) { return *this = *this * o; }

  GradedPolynomial& operator*=(const C& s) {
    if (CoeffTraits<C>::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= s;
      if (CoeffTraits<C>::is_zero(it->second)) it = terms_.erase(it);
      else ++it;
    }
    return *this;
  }

  friend GradedPolynomial operator*(GradedPolynomial a, const C& s) {
    a *= s;
    return a;
  }

  friend GradedPolynomial operator*(const C& s, GradedPolynomial a) {
    a *= s;
    return a;
  }

  GradedPolynomial pow(int n) const {
    if (n < 0) fail(ErrorCode::InvalidInput, "negative power");
    GradedPolynomial r = one(system_);
    for (int k = 0; k < n; ++k) r *= *this;
    return r;
  }

  bool operator==(const GradedPolynomial& o) const {
    if (!(system_ == o.system_ || (system_ && o.system_ && *system_ == *o.system_))) return false;
    return terms_ == o.terms_;
  }

  static int term_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
  }

  int term_weight(const Exponents& e) const {
    int w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += e[i] * system_->weight(i);
    return w;
  }

  // Weight of a homogeneous value; nullopt for zero (homogeneous of every
  // weight) and for a genuinely mixed value.  Use is_homogeneous_of / weight
  // together when the distinction matters.
  std::optional<int> weight() const {
    std::optional<int> w;
    for (const auto& [e, c] : terms_) {
      int tw = term_weight(e);
      if (!w) w = tw;
      else if (*w != tw) return std::nullopt;
    }
    return w;
  }

  bool is_homogeneous() const { return terms_.empty() || weight().has_value(); }

  bool is_homogeneous_of(int w) const {
    for (const auto& [e, c] : terms_)
      if (term_weight(e) != w) return false;
    return true;
  }

  // Weight of a nonzero homogeneous value; throws otherwise.
  int weight_of() const {
    auto w = weight();
    if (!w) {
      if (terms_.empty()) return 0;
      fail(ErrorCode::NotHomogeneous, "value mixes weights");
    }
    return *w;
  }

  int max_term_weight() const {
    int w = 0;
    for (const auto& [e, c] : terms_) w = std::max(w, term_weight(e));
    return w;
  }

  // Remove every monomial of weight strictly above `cap`.  Sound as a quotient
  // map: generator weights are positive, so a discarded term can never
  // influence a retained one under ring operations.
  GradedPolynomial& drop_weight_above(int cap) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (term_weight(it->first) > cap) it = terms_.erase(it);
      else ++it;
    }
    return *this;
  }

  // Ring homomorphism determined by generator images.  `images[i]` replaces
  // generator i; all images must share `target` (checked), and the coefficient
  // ring is preserved.
  GradedPolynomial substitute(const SystemPtr& target,
                              const std::vector<GradedPolynomial>& images) const {
    if (images.size() != system_->size())
      fail(ErrorCode::MissingImage, "expected " + std::to_string(system_->size()) +
                                        " generator images, got " + std::to_string(images.size()));
    for (const auto& im : images) require_same_system(im.system(), target);
    GradedPolynomial result(target);
    // Memoize image powers; exponents in practice stay small.
    std::vector<std::vector<GradedPolynomial>> powers(images.size(), {one(target)});
    auto power = [&](std::size_t i, int e) -> const GradedPolynomial& {
      auto& ladder = powers[i];
      while (static_cast<int>(ladder.size()) <= e) ladder.push_back(ladder.back() * images[i]);
      return ladder[e];
    };
    for (const auto& [e, c] : terms_) {
      GradedPolynomial t = constant(target, c);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) t *= power(i, e[i]);
      result += t;
    }
    return result;
  }

  template <class D>
  GradedPolynomial<D> convert() const {
    GradedPolynomial<D> r(system_);
    for (const auto& [e, c] : terms_) r.add_term(e, D(c));
    return r;
  }

 private:
  void check_exponents(const Exponents& e) const {
    if (e.size() != system_->size())
      fail(ErrorCode::SystemMismatch, "exponent vector length does not match system");
    for (int x : e)
      if (x < 0) fail(ErrorCode::InvalidInput, "negative exponent");
  }

  SystemPtr system_;
  TermMap terms_;
};

using PolyZ = GradedPolynomial<Int>;
using PolyQ = GradedPolynomial<Rat>;

// Integer polynomial -> rational coefficients.
inline PolyQ to_rational(const PolyZ& p) { return p.template convert<Rat>(); }

// Rational polynomial -> integer coefficients; every denominator must be 1.
inline PolyZ to_integer(const PolyQ& p) {
  PolyZ r(p.system());
  for (const auto& [e, c] : p.terms()) {
    if (denominator(c) != 1)
      fail(ErrorCode::DenominatorNotCleared,
           "coefficient " + CoeffTraits<Rat>::to_string(c) + " is not an integer");
    r.add_term(e, numerator(c));
  }
  return r;
}

}  // namespace m0n
