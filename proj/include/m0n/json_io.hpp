#pragma once

#include <cctype>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "m0n/moduli.hpp"

namespace m0n {

using Json = nlohmann::ordered_json;

namespace detail {

inline Int int_from_string(const std::string& s) {
  if (s.empty()) fail(ErrorCode::InvalidInput, "empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) fail(ErrorCode::InvalidInput, "bare sign is not an integer");
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      fail(ErrorCode::InvalidInput, "bad integer literal '" + s + "'");
  return Int(s);
}

inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(int_from_string(s));
  Int num = int_from_string(s.substr(0, slash));
  Int den = int_from_string(s.substr(slash + 1));
  if (den <= 0) fail(ErrorCode::InvalidInput, "denominator must be positive in '" + s + "'");
  return Rat(num, den);
}

inline Int coeff_from_string(const std::string& s, Int*) { return int_from_string(s); }
inline Rat coeff_from_string(const std::string& s, Rat*) { return rat_from_string(s); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Polynomials:  {"system": "...", "ring": "Z"|"Q", "terms": [{"exp": [...],
// "coeff": "decimal or p/q"}, ...]}
// ---------------------------------------------------------------------------

template <class C>
Json to_json(const GradedPolynomial<C>& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(Json{{"exp", e}, {"coeff", CoeffTraits<C>::to_string(c)}});
  return Json{{"system", p.system()->name()},
              {"ring", CoeffTraits<C>::ring_name()},
              {"terms", std::move(terms)}};
}

template <class C>
GradedPolynomial<C> polynomial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("system") || !j.contains("terms"))
    fail(ErrorCode::InvalidInput, "polynomial JSON needs 'system' and 'terms'");
  auto sys = GeneratorSystem::by_name(j.at("system").get<std::string>());
  if (j.contains("ring") && j.at("ring").get<std::string>() != CoeffTraits<C>::ring_name())
    fail(ErrorCode::InvalidInput, "polynomial JSON carries the wrong coefficient ring");
  auto p = GradedPolynomial<C>::zero(sys);
  for (const auto& term : j.at("terms")) {
    Exponents e = term.at("exp").get<Exponents>();
    if (e.size() != sys->size())
      fail(ErrorCode::InvalidInput, "exponent vector length does not match the system");
    for (int v : e)
      if (v < 0) fail(ErrorCode::InvalidInput, "negative exponent");
    C c = detail::coeff_from_string(term.at("coeff").get<std::string>(), static_cast<C*>(nullptr));
    p += GradedPolynomial<C>::monomial(sys, std::move(e), std::move(c));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Series:  adds "variables", "order" and (optionally) "weight_cap".
// ---------------------------------------------------------------------------

template <class C>
Json to_json(const TruncatedSeries<C>& s) {
  Json terms = Json::array();
  for (const auto& [e, p] : s.coefficients())
    terms.push_back(Json{{"exp", e}, {"coeff", to_json(p)}});
  Json out{{"system", s.system()->name()},
           {"ring", CoeffTraits<C>::ring_name()},
           {"variables", *s.variables()},
           {"order", s.order()}};
  if (s.weight_cap() >= 0) out["weight_cap"] = s.weight_cap();
  out["terms"] = std::move(terms);
  return out;
}

template <class C>
TruncatedSeries<C> series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("variables") || !j.contains("order") || !j.contains("terms"))
    fail(ErrorCode::InvalidInput, "series JSON needs 'variables', 'order' and 'terms'");
  VarsPtr vars = make_vars(j.at("variables").get<Variables>());
  int order = j.at("order").get<int>();
  if (order < 0) fail(ErrorCode::InvalidInput, "negative series order");
  int cap = j.contains("weight_cap") ? j.at("weight_cap").get<int>() : -1;
  auto sys = GeneratorSystem::by_name(j.at("system").get<std::string>());
  auto s = TruncatedSeries<C>::zero(sys, vars, order, cap);
  for (const auto& term : j.at("terms")) {
    Exponents e = term.at("exp").get<Exponents>();
    if (e.size() != vars->size())
      fail(ErrorCode::InvalidInput, "exponent vector length does not match the variables");
    for (int v : e)
      if (v < 0) fail(ErrorCode::InvalidInput, "negative exponent");
    s.add_term(std::move(e), polynomial_from_json<C>(term.at("coeff")));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Cache files:  [{"key": {"n": 5, "d": [2], "theory": "universal"},
//                 "value": {polynomial}}, ...]
// Entries are validated structurally (known theory, canonical exponents,
// matching coefficient system, correct homogeneous weight); anything
// malformed is reported on stderr and skipped.
// ---------------------------------------------------------------------------

inline Json cache_to_json(const IntersectionCache& cache) {
  Json out = Json::array();
  for (const auto& [key, value] : cache.entries())
    out.push_back(Json{{"key", Json{{"n", key.n}, {"d", key.d}, {"theory", key.theory}}},
                       {"value", to_json(value)}});
  return out;
}

// Returns the number of entries accepted.
inline std::size_t cache_from_json(IntersectionCache& cache, const Json& j) {
  if (!j.is_array()) fail(ErrorCode::InvalidInput, "cache JSON must be an array");
  std::size_t accepted = 0;
  for (const auto& entry : j) {
    try {
      const Json& k = entry.at("key");
      IntersectionKey key{k.at("n").get<int>(), k.at("d").get<std::vector<int>>(),
                          k.at("theory").get<std::string>()};
      if (key.n < 3) fail(ErrorCode::CorruptData, "n out of range");
      if (key.d != canonical_exponents(key.d))
        fail(ErrorCode::CorruptData, "exponents not in canonical form");
      int total = 0;
      for (int di : key.d) {
        if (di < 0) fail(ErrorCode::CorruptData, "negative exponent");
        total += di;
      }
      const Theory* theory = nullptr;
      if (key.theory == "ktheory-twisted") theory = &ktheory_theory();
      else theory = &theory_by_name(key.theory);
      PolyZ value = polynomial_from_json<Int>(entry.at("value"));
      require_same_system(value.system(), theory->system);
      // The class must be homogeneous of the expected weight (or zero).
      if (!value.is_homogeneous_of(key.n - 3 - total))
        fail(ErrorCode::CorruptData, "value weight disagrees with n and d");
      cache.store(key, value);
      ++accepted;
    } catch (const std::exception& e) {
      std::cerr << "warning: skipping corrupt cache entry: " << e.what() << "\n";
    }
  }
  return accepted;
}

inline void save_cache(const IntersectionCache& cache, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::InvalidInput, "cannot write cache file '" + path + "'");
  out << cache_to_json(cache).dump(2) << "\n";
  if (!out) fail(ErrorCode::InvalidInput, "failed while writing cache file '" + path + "'");
}

// Missing file: silently start fresh.  Unparseable file: warn and start
// fresh.  Individually bad entries: warn and skip.
inline std::size_t load_cache(IntersectionCache& cache, const std::string& path) {
  std::ifstream in(path);
  if (!in) return 0;
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    std::cerr << "warning: ignoring unreadable cache file '" << path << "': " << e.what() << "\n";
    return 0;
  }
  try {
    return cache_from_json(cache, j);
  } catch (const std::exception& e) {
    std::cerr << "warning: ignoring cache file '" << path << "': " << e.what() << "\n";
    return 0;
  }
}

}  // namespace m0n
