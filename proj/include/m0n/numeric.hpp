#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

#include <string>

#include "m0n/errors.hpp"

namespace m0n {

// All arithmetic is exact: integers are arbitrary-precision, rationals are
// kept in lowest terms with positive denominator by the backend.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Uniform interface over the two coefficient rings so the polynomial and
// series templates can stay agnostic.
template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Int> {
  static bool is_zero(const Int& c) { return c == 0; }
  static bool is_unit(const Int& c) { return c == 1 || c == -1; }
  static Int inverse(const Int& c) {
    if (!is_unit(c)) fail(ErrorCode::NonUnitConstantTerm, "integer " + c.str() + " is not invertible");
    return c;
  }
  // Exact division; the caller promises divisibility, we verify it.
  static Int divide(const Int& a, const Int& b, ErrorCode on_failure = ErrorCode::DivisionNotExact) {
    if (b == 0) fail(on_failure, "division by zero");
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) fail(on_failure, a.str() + " is not divisible by " + b.str());
    return q;
  }
  static std::string to_string(const Int& c) { return c.str(); }
  static const char* ring_name() { return "Z"; }
};

template <>
struct CoeffTraits<Rat> {
  static bool is_zero(const Rat& c) { return c == 0; }
  static bool is_unit(const Rat& c) { return c != 0; }
  static Rat inverse(const Rat& c) {
    if (c == 0) fail(ErrorCode::NonUnitConstantTerm, "zero is not invertible");
    return Rat(1) / c;
  }
  static Rat divide(const Rat& a, const Rat& b, ErrorCode on_failure = ErrorCode::DivisionNotExact) {
    if (b == 0) fail(on_failure, "division by zero");
    return a / b;
  }
  static std::string to_string(const Rat& c) {
    if (denominator(c) == 1) return numerator(c).str();
    return numerator(c).str() + "/" + denominator(c).str();
  }
  static const char* ring_name() { return "Q"; }
};

inline Int factorial(int n) {
  Int r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

// (sum d_i)! / prod d_i!  -- the number of ways to interleave the blocks.
template <class It>
Int multinomial(It first, It last) {
  int total = 0;
  Int denom = 1;
  for (It it = first; it != last; ++it) {
    total += *it;
    denom *= factorial(*it);
  }
  return CoeffTraits<Int>::divide(factorial(total), denom);
}

}  // namespace m0n
