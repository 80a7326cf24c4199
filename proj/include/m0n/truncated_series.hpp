#pragma once

#include <algorithm>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "m0n/graded_polynomial.hpp"

namespace m0n {

using Variables = std::vector<std::string>;
using VarsPtr = std::shared_ptr<const Variables>;

inline VarsPtr make_vars(std::initializer_list<std::string> names) {
  return std::make_shared<const Variables>(names);
}

inline VarsPtr make_vars(Variables names) {
  return std::make_shared<const Variables>(std::move(names));
}

inline void require_same_vars(const VarsPtr& a, const VarsPtr& b) {
  if (a == b) return;
  if (a && b && *a == *b) return;
  fail(ErrorCode::VariableMismatch, "series variable sets differ");
}

// Shared singleton variable sets so the common cases compare by pointer.
inline VarsPtr vars_x() {
  static VarsPtr v = make_vars({"x"});
  return v;
}
inline VarsPtr vars_xy() {
  static VarsPtr v = make_vars({"x", "y"});
  return v;
}
inline VarsPtr vars_xyz() {
  static VarsPtr v = make_vars({"x", "y", "z"});
  return v;
}

// Multivariate power series truncated at a total variable degree, with
// GradedPolynomial coefficients.  Two truncation mechanisms:
//   * order: terms of variable degree > order are unknown and absent.  Binary
//     operations take the minimum order of the operands; exact division by a
//     series of valuation v lowers the order by v.
//   * weight cap: coefficient monomials of weight > cap are dropped.  Because
//     generator weights are positive, weights only grow under multiplication,
//     so capped arithmetic computes the exact image in the quotient by the
//     high-weight ideal.  This is how computations stay inside the window
//     where the universal coefficient data is complete.
template <class C>
class TruncatedSeries {
 public:
  using Poly = GradedPolynomial<C>;
  using CoeffMap = std::map<Exponents, Poly, MonomialOrder>;

  TruncatedSeries(SystemPtr system, VarsPtr vars, int order, int weight_cap = -1)
      : system_(std::move(system)), vars_(std::move(vars)), order_(order), weight_cap_(weight_cap) {
    if (order_ < 0) fail(ErrorCode::InvalidInput, "negative series order");
  }

  static TruncatedSeries zero(SystemPtr system, VarsPtr vars, int order, int cap = -1) {
    return TruncatedSeries(std::move(system), std::move(vars), order, cap);
  }

  static TruncatedSeries from_polynomial(const Poly& p, VarsPtr vars, int order, int cap = -1) {
    TruncatedSeries s(p.system(), std::move(vars), order, cap);
    s.add_term(Exponents(s.vars_->size(), 0), p);
    return s;
  }

  static TruncatedSeries variable(SystemPtr system, VarsPtr vars, const std::string& name,
                                  int order, int cap = -1) {
    TruncatedSeries s(std::move(system), std::move(vars), order, cap);
    Exponents e(s.vars_->size(), 0);
    e[s.var_index(name)] = 1;
    s.add_term(std::move(e), Poly::one(s.system_));
    return s;
  }

  const SystemPtr& system() const { return system_; }
  const VarsPtr& variables() const { return vars_; }
  int order() const { return order_; }
  int weight_cap() const { return weight_cap_; }
  const CoeffMap& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  std::size_t var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_->size(); ++i)
      if ((*vars_)[i] == name) return i;
    fail(ErrorCode::VariableMismatch, "unknown variable '" + name + "'");
  }

  Poly coefficient(const Exponents& e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Poly::zero(system_) : it->second;
  }

  // Coefficient of x^k for one-variable series.
  Poly coefficient_at(int k) const {
    if (vars_->size() != 1) fail(ErrorCode::VariableMismatch, "coefficient_at needs one variable");
    return coefficient(Exponents{k});
  }

  Poly constant_term() const { return coefficient(Exponents(vars_->size(), 0)); }

  void add_term(Exponents exps, Poly value) {
    if (exps.size() != vars_->size())
      fail(ErrorCode::VariableMismatch, "exponent vector length does not match variables");
    require_same_system(value.system(), system_);
    if (Poly::term_degree(exps) > order_) return;
    if (weight_cap_ >= 0) value.drop_weight_above(weight_cap_);
    if (value.is_zero()) return;
    auto it = coeffs_.find(exps);
    if (it == coeffs_.end()) {
      coeffs_.emplace(std::move(exps), std::move(value));
    } else {
      it->second += value;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  // Smallest total degree carrying a nonzero coefficient; nullopt for zero.
  std::optional<int> valuation() const {
    std::optional<int> v;
    for (const auto& [e, p] : coeffs_) {
      int d = Poly::term_degree(e);
      if (!v || d < *v) v = d;
    }
    return v;
  }

  TruncatedSeries truncated_to(int order) const {
    TruncatedSeries r(system_, vars_, std::min(order, order_), weight_cap_);
    for (const auto& [e, p] : coeffs_) r.add_term(e, p);
    return r;
  }

  // Raise the order bound without adding terms.  Only sound when the series
  // is already complete through the new order: either it is a polynomial, or
  // its combined degree plus the weight cap empties every higher degree.
  // Callers own that proof obligation.
  TruncatedSeries extended_to(int order) const {
    if (order <= order_) return truncated_to(order);
    TruncatedSeries r(system_, vars_, order, weight_cap_);
    for (const auto& [e, p] : coeffs_) r.add_term(e, p);
    return r;
  }

  TruncatedSeries with_weight_cap(int cap) const {
    TruncatedSeries r(system_, vars_, order_, combine_caps(weight_cap_, cap));
    for (const auto& [e, p] : coeffs_) r.add_term(e, p);
    return r;
  }

  static int combine_caps(int a, int b) {
    if (a < 0) return b;
    if (b < 0) return a;
    return std::min(a, b);
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) { return merge(o, 1); }
  TruncatedSeries& operator-=(const TruncatedSeries& o) { return merge(o, -1); }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  TruncatedSeries operator-() const {
    TruncatedSeries r(system_, vars_, order_, weight_cap_);
    for (const auto& [e, p] : coeffs_) r.coeffs_.emplace(e, -p);
    return r;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_system(a.system_, b.system_);
    require_same_vars(a.vars_, b.vars_);
    TruncatedSeries r(a.system_, a.vars_, std::min(a.order_, b.order_),
                      combine_caps(a.weight_cap_, b.weight_cap_));
    for (const auto& [ea, pa] : a.coeffs_) {
      int da = Poly::term_degree(ea);
      if (da > r.order_) continue;
      for (const auto& [eb, pb] : b.coeffs_) {
        if (da + Poly::term_degree(eb) > r.order_) continue;
        Exponents e(ea);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        r.add_term(std::move(e), pa * pb);
      }
    }
    return r;
  }

  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  // Scale by a coefficient-ring polynomial.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const Poly& s) {
    require_same_system(a.system_, s.system());
    TruncatedSeries r(a.system_, a.vars_, a.order_, a.weight_cap_);
    for (const auto& [e, p] : a.coeffs_) r.add_term(e, p * s);
    return r;
  }

  friend TruncatedSeries operator*(const Poly& s, const TruncatedSeries& a) { return a * s; }

  TruncatedSeries pow(int n) const {
    if (n < 0) fail(ErrorCode::InvalidInput, "negative power");
    TruncatedSeries r = from_polynomial(Poly::one(system_), vars_, order_, weight_cap_);
    for (int k = 0; k < n; ++k) r *= *this;
    return r;
  }

  bool operator==(const TruncatedSeries& o) const {
    if (!(system_ == o.system_ || *system_ == *o.system_)) return false;
    if (!(vars_ == o.vars_ || *vars_ == *o.vars_)) return false;
    return order_ == o.order_ && coeffs_ == o.coeffs_;
  }

  // Equality of the jets both sides actually know (through the min order).
  bool agrees_with(const TruncatedSeries& o) const {
    require_same_system(system_, o.system_);
    require_same_vars(vars_, o.vars_);
    int n = std::min(order_, o.order_);
    return truncated_to(n).coeffs_ == o.truncated_to(n).coeffs_;
  }

  // Multiplicative inverse; the constant term must be an invertible constant
  // of the coefficient ring (+-1 over Z, any nonzero rational over Q).
  TruncatedSeries invert_unit() const {
    Poly c0 = constant_term();
    if (!c0.is_constant() || !CoeffTraits<C>::is_unit(c0.constant_term()))
      fail(ErrorCode::NonUnitConstantTerm, "series constant term is not an invertible constant");
    C inv = CoeffTraits<C>::inverse(c0.constant_term());
    // a = c0 (1 + h), so 1/a = (1/c0) sum (-h)^k, evaluated by Horner.
    TruncatedSeries h = *this * Poly::constant(system_, inv);
    h.coeffs_.erase(Exponents(vars_->size(), 0));
    TruncatedSeries s = from_polynomial(Poly::one(system_), vars_, order_, weight_cap_);
    for (int k = 0; k < order_; ++k) {
      s = from_polynomial(Poly::one(system_), vars_, order_, weight_cap_) - h * s;
    }
    return s * Poly::constant(system_, inv);
  }

  // Exact quotient *this / d.  Requires the quotient to exist in the series
  // ring; any remainder raises DivisionNotExact.  The result's order drops by
  // the valuation of d.  The lowest homogeneous part of d must have an
  // invertible constant leading coefficient (true for every divisor the
  // pipeline produces: variables, variable differences, and group-law sums).
  TruncatedSeries exact_divide(const TruncatedSeries& d) const {
    require_same_system(system_, d.system_);
    require_same_vars(vars_, d.vars_);
    auto dval = d.valuation();
    if (!dval) fail(ErrorCode::DivisionNotExact, "division by the zero series");
    int v = *dval;
    int result_order = std::min(order_, d.order_) - v;
    if (result_order < 0) fail(ErrorCode::InvalidInput, "series order too small for division");

    // Slice both operands by total variable degree; inside a slice, terms are
    // ordered lexicographically and eliminated from the lex-largest down.
    using Slice = std::map<Exponents, Poly>;  // ascending lex; leading = rbegin
    auto slices_of = [](const TruncatedSeries& s, int upto) {
      std::vector<Slice> out(upto + 1);
      for (const auto& [e, p] : s.coeffs_) {
        int deg = Poly::term_degree(e);
        if (deg <= upto) out[deg].emplace(e, p);
      }
      return out;
    };
    std::vector<Slice> ds = slices_of(d, v + result_order);
    const Slice& dlow = ds[v];
    Exponents dlead = dlow.rbegin()->first;
    const Poly& dlead_coeff = dlow.rbegin()->second;
    if (!dlead_coeff.is_constant() || !CoeffTraits<C>::is_unit(dlead_coeff.constant_term()))
      fail(ErrorCode::DivisionNotExact,
           "divisor's leading coefficient is not an invertible constant");
    C dlead_inv = CoeffTraits<C>::inverse(dlead_coeff.constant_term());

    std::vector<Slice> numer = slices_of(*this, v + result_order);
    // Degrees below the divisor valuation must vanish for the quotient to
    // exist at all.
    for (int m = 0; m < v && m < static_cast<int>(numer.size()); ++m)
      if (!numer[m].empty())
        fail(ErrorCode::DivisionNotExact, "dividend valuation below divisor valuation");

    TruncatedSeries q(system_, vars_, result_order, combine_caps(weight_cap_, d.weight_cap_));
    std::vector<Slice> qs(result_order + 1);
    auto slice_accumulate = [&](Slice& s, Exponents e, Poly p) {
      if (weight_cap_ >= 0) p.drop_weight_above(weight_cap_);
      if (p.is_zero()) return;
      auto it = s.find(e);
      if (it == s.end()) s.emplace(std::move(e), std::move(p));
      else {
        it->second += p;
        if (it->second.is_zero()) s.erase(it);
      }
    };
    for (int m = 0; m <= result_order; ++m) {
      // Target slice: numer[m+v] - sum_{k>v} d_k * q_{m+v-k}.
      Slice target = numer[m + v];
      for (int k = v + 1; k <= m + v; ++k) {
        const Slice& dk = ds[k];
        const Slice& qk = qs[m + v - k];
        for (const auto& [ed, pd] : dk)
          for (const auto& [eq, pq] : qk) {
            Exponents e(ed);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eq[i];
            slice_accumulate(target, std::move(e), -(pd * pq));
          }
      }
      // Divide the homogeneous slice `target` by dlow.
      Slice& qm = qs[m];
      while (!target.empty()) {
        auto lead = std::prev(target.end());
        Exponents mono(lead->first);
        bool divisible = true;
        for (std::size_t i = 0; i < mono.size(); ++i) {
          mono[i] -= dlead[i];
          if (mono[i] < 0) { divisible = false; break; }
        }
        if (!divisible)
          fail(ErrorCode::DivisionNotExact, "remainder term survives homogeneous division");
        Poly qcoeff = lead->second * dlead_inv;
        slice_accumulate(qm, mono, qcoeff);
        // Subtract qcoeff * X^mono * dlow from target; cancels the lead term.
        for (const auto& [ed, pd] : dlow) {
          Exponents e(mono);
          for (std::size_t i = 0; i < e.size(); ++i) e[i] += ed[i];
          slice_accumulate(target, std::move(e), -(qcoeff * pd));
        }
      }
      for (const auto& [e, p] : qm) q.add_term(e, p);
    }
    return q;
  }

  // Substitute every variable of *this by a series over a common target
  // variable set.  Images must all share variables/system and have zero
  // constant term (otherwise the truncated result would be meaningless).
  TruncatedSeries compose(const std::map<std::string, TruncatedSeries>& images) const {
    if (images.empty()) fail(ErrorCode::MissingImage, "empty substitution map");
    const TruncatedSeries& first = images.begin()->second;
    VarsPtr tvars = first.vars_;
    int torder = first.order_;
    int tcap = combine_caps(weight_cap_, first.weight_cap_);
    for (const auto& [name, im] : images) {
      require_same_system(im.system_, system_);
      require_same_vars(im.vars_, tvars);
      torder = std::min(torder, im.order_);
      tcap = combine_caps(tcap, im.weight_cap_);
      if (!im.constant_term().is_zero())
        fail(ErrorCode::NonzeroConstantSubstitution,
             "image of '" + name + "' has a nonzero constant term");
    }
    std::vector<const TruncatedSeries*> image_of(vars_->size(), nullptr);
    for (std::size_t i = 0; i < vars_->size(); ++i) {
      auto it = images.find((*vars_)[i]);
      if (it == images.end())
        fail(ErrorCode::MissingImage, "no image for variable '" + (*vars_)[i] + "'");
      image_of[i] = &it->second;
    }
    TruncatedSeries result(system_, tvars, torder, tcap);
    TruncatedSeries unit = from_polynomial(Poly::one(system_), tvars, torder, tcap);
    // Memoized image powers per variable.
    std::vector<std::vector<TruncatedSeries>> powers(vars_->size(), {unit});
    auto power = [&](std::size_t i, int e) -> const TruncatedSeries& {
      auto& ladder = powers[i];
      while (static_cast<int>(ladder.size()) <= e) ladder.push_back(ladder.back() * (*image_of[i]));
      return ladder[e];
    };
    for (const auto& [e, p] : coeffs_) {
      TruncatedSeries t = unit * p;
      bool dead = false;
      for (std::size_t i = 0; i < e.size() && !dead; ++i) {
        if (e[i] == 0) continue;
        if (image_of[i]->is_zero()) { dead = true; break; }
        t *= power(i, e[i]);
      }
      if (!dead) result += t;
    }
    return result;
  }

  // Compositional inverse of a one-variable series x + O(x^2) whose linear
  // coefficient is exactly 1.
  TruncatedSeries revert() const {
    if (vars_->size() != 1) fail(ErrorCode::NotReversible, "revert needs one variable");
    if (!constant_term().is_zero())
      fail(ErrorCode::NotReversible, "series has a nonzero constant term");
    Poly lin = coefficient(Exponents{1});
    if (!(lin == Poly::one(system_)))
      fail(ErrorCode::NotReversible, "linear coefficient must be 1");
    // a(t) = t + h(t) with val h >= 2; iterate b <- x - h(b).
    TruncatedSeries h = *this;
    h.coeffs_.erase(Exponents{1});
    TruncatedSeries x = variable(system_, vars_, (*vars_)[0], order_, weight_cap_);
    TruncatedSeries b = x;
    const std::string& vname = (*vars_)[0];
    for (int k = 0; k < order_; ++k) {
      if (h.is_zero()) break;
      b = x - h.compose({{vname, b}});
    }
    return b;
  }

  // Partial derivative.
  TruncatedSeries derivative(const std::string& var) const {
    std::size_t vi = var_index(var);
    TruncatedSeries r(system_, vars_, order_ > 0 ? order_ - 1 : 0, weight_cap_);
    for (const auto& [e, p] : coeffs_) {
      if (e[vi] == 0) continue;
      Exponents d(e);
      d[vi] -= 1;
      r.add_term(std::move(d), p * C(e[vi]));
    }
    return r;
  }

  // Antiderivative with zero constant term; requires division by k+1 to be
  // possible in the coefficient ring (use rational coefficients).
  TruncatedSeries antiderivative(const std::string& var) const {
    std::size_t vi = var_index(var);
    TruncatedSeries r(system_, vars_, order_ + 1, weight_cap_);
    for (const auto& [e, p] : coeffs_) {
      Exponents d(e);
      d[vi] += 1;
      Poly scaled(system_);
      for (const auto& [pe, pc] : p.terms())
        scaled.add_term(pe, CoeffTraits<C>::divide(pc, C(d[vi]), ErrorCode::DenominatorNotCleared));
      r.add_term(std::move(d), std::move(scaled));
    }
    return r;
  }

  // Combined degree of a term = variable degree - coefficient weight.  A
  // series is combined-homogeneous when every monomial of every coefficient
  // gives the same value.  The group-law pipeline preserves this invariant.
  std::optional<int> combined_degree() const {
    std::optional<int> d;
    for (const auto& [e, p] : coeffs_) {
      int deg = Poly::term_degree(e);
      for (const auto& [pe, pc] : p.terms()) {
        int cd = deg - p.term_weight(pe);
        if (!d) d = cd;
        else if (*d != cd) return std::nullopt;
      }
    }
    return d;
  }

  bool is_combined_homogeneous_of(int c) const {
    auto d = combined_degree();
    return !d.has_value() || *d == c;
  }

  // Replace each coefficient polynomial via a generator-image substitution,
  // keeping the variables.  Maps a series over one coefficient system to a
  // series over another (e.g. universal -> multiplicative).
  TruncatedSeries substitute_coefficients(const SystemPtr& target,
                                          const std::vector<Poly>& images,
                                          int new_cap = -1) const {
    TruncatedSeries r(target, vars_, order_, new_cap);
    for (const auto& [e, p] : coeffs_) r.add_term(e, p.substitute(target, images));
    return r;
  }

  template <class D>
  TruncatedSeries<D> convert() const {
    TruncatedSeries<D> r(system_, vars_, order_, weight_cap_);
    for (const auto& [e, p] : coeffs_) r.add_term(e, p.template convert<D>());
    return r;
  }

 private:
  TruncatedSeries& merge(const TruncatedSeries& o, int sign) {
    require_same_system(system_, o.system_);
    require_same_vars(vars_, o.vars_);
    order_ = std::min(order_, o.order_);
    weight_cap_ = combine_caps(weight_cap_, o.weight_cap_);
    // Re-truncate existing terms to the (possibly lowered) order.
    for (auto it = coeffs_.begin(); it != coeffs_.end();)
      it = Poly::term_degree(it->first) > order_ ? coeffs_.erase(it) : std::next(it);
    for (const auto& [e, p] : o.coeffs_) add_term(e, sign > 0 ? p : -p);
    return *this;
  }

  SystemPtr system_;
  VarsPtr vars_;
  int order_;
  int weight_cap_;
  CoeffMap coeffs_;
};

using SeriesZ = TruncatedSeries<Int>;
using SeriesQ = TruncatedSeries<Rat>;

inline SeriesQ to_rational(const SeriesZ& s) { return s.convert<Rat>(); }

inline SeriesZ to_integer(const SeriesQ& s) {
  SeriesZ r(s.system(), s.variables(), s.order(), s.weight_cap());
  for (const auto& [e, p] : s.coefficients()) r.add_term(e, to_integer(p));
  return r;
}

}  // namespace m0n
