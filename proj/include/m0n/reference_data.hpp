#pragma once

#include <utility>
#include <vector>

namespace m0n::reference {

// Golden values used by the verification layer and the test suite.  Every
// string is in the library's canonical rendering; polynomial strings parse
// back with parse_z / parse_q over the named generator system.

// ---------------------------------------------------------------------------
// Cobordism-valued psi-class numbers on the n-marked genus-0 spaces, grouped
// by the exponent multiset d (descending, zeros dropped).  Values live over
// the universal coefficient ring u1..u5.
// ---------------------------------------------------------------------------
struct PsiTableEntry {
  int n;
  std::vector<int> d;
  const char* value;
};

inline const std::vector<PsiTableEntry>& psi_table() {
  static const std::vector<PsiTableEntry> table = {
      // |d| = 0: total-space classes.
      {3, {}, "1"},
      {4, {}, "u1"},
      {5, {}, "4*u1^2 - 3*u2"},
      {6, {}, "31*u1^3 - 30*u1*u2 + 17*u3"},
      {7, {}, "273*u1^4 - 317*u1^2*u2 + 70*u2^2 + 214*u1*u3 - 25*u4"},
      {8, {}, "2898*u1^5 - 4063*u1^3*u2 + 2012*u1*u2^2 + 2765*u1^2*u3 - 1204*u2*u3"
              " - 385*u1*u4 + 461*u5"},
      // |d| = 1
      {4, {1}, "1"},
      {5, {1}, "u1"},
      {6, {1}, "10*u1^2 - 9*u2"},
      {7, {1}, "101*u1^3 - 100*u1*u2 + 67*u3"},
      {8, {1}, "1078*u1^4 - 1302*u1^2*u2 + 350*u2^2 + 889*u1*u3 - 125*u4"},
      // |d| = 2
      {5, {2}, "1"},
      {5, {1, 1}, "2"},
      {6, {2}, "u1"},
      {6, {1, 1}, "0"},
      {7, {2}, "20*u1^2 - 19*u2"},
      {7, {1, 1}, "38*u1^2 - 36*u2"},
      {8, {2}, "246*u1^3 - 245*u1*u2 + 177*u3"},
      {8, {1, 1}, "400*u1^3 - 400*u1*u2 + 330*u3"},
      // |d| = 3
      {6, {3}, "1"},
      {6, {2, 1}, "3"},
      {6, {1, 1, 1}, "6"},
      {7, {3}, "u1"},
      {7, {2, 1}, "-2*u1"},
      {7, {1, 1, 1}, "-12*u1"},
      {8, {3}, "35*u1^2 - 34*u2"},
      {8, {2, 1}, "100*u1^2 - 95*u2"},
      {8, {1, 1, 1}, "210*u1^2 - 180*u2"},
      // |d| = 4
      {7, {4}, "1"},
      {7, {3, 1}, "4"},
      {7, {2, 2}, "6"},
      {7, {2, 1, 1}, "12"},
      {7, {1, 1, 1, 1}, "24"},
      {8, {4}, "u1"},
      {8, {3, 1}, "-5*u1"},
      {8, {2, 2}, "-10*u1"},
      {8, {2, 1, 1}, "-40*u1"},
      {8, {1, 1, 1, 1}, "-120*u1"},
      // |d| = 5
      {8, {5}, "1"},
      {8, {4, 1}, "5"},
      {8, {3, 2}, "10"},
      {8, {3, 1, 1}, "20"},
      {8, {2, 2, 1}, "30"},
      {8, {2, 1, 1, 1}, "60"},
      {8, {1, 1, 1, 1, 1}, "120"},
  };
  return table;
}

// Total-space classes rewritten over the projective-class basis p1..p5
// (rational coefficients, system "pbasis").
inline const std::vector<std::pair<int, const char*>>& pbasis_expansion_table() {
  static const std::vector<std::pair<int, const char*>> table = {
      {5, "4*p1^2 - 3*p2"},
      {6, "45/2*p1^3 - 30*p1*p2 + 17/2*p3"},
      {7, "166*p1^4 - 317*p1^2*p2 + 70*p2^2 + 107*p1*p3 - 25*p4"},
      {8, "3031/2*p1^5 - 11305/3*p1^3*p2 + 3563/2*p1*p2^2 + 2765/2*p1^2*p3 - 602*p2*p3"
          " - 385*p1*p4 + 461/6*p5"},
  };
  return table;
}

// ---------------------------------------------------------------------------
// Canonical text renderings of the derived series of the universal law,
// each truncated to the stated total degree.
// ---------------------------------------------------------------------------
struct SeriesDisplay {
  const char* name;
  int through;  // total variable degree of the truncation
  const char* text;
};

inline const std::vector<SeriesDisplay>& series_display_table() {
  static const std::vector<SeriesDisplay> table = {
      {"chi", 4, "-x - u1*x^2 - u1^2*x^3 + (-2*u1^3 + u1*u2 - u3)*x^4"},
      {"q", 3,
       "u1 + (-u1^2 + u2)*x + (-u1^2 + u2)*y + (2*u1^3 - 2*u1*u2 + 2*u3)*x^2"
       " + (4*u1^3 - 4*u1*u2 + 3*u3)*x*y + (2*u1^3 - 2*u1*u2 + 2*u3)*y^2"
       " + (-3*u1^4 + 3*u1^2*u2 - u2^2 - 4*u1*u3 + u4)*x^3"
       " + (-10*u1^4 + 11*u1^2*u2 - 3*u2^2 - 11*u1*u3 + 2*u4)*x^2*y"
       " + (-10*u1^4 + 11*u1^2*u2 - 3*u2^2 - 11*u1*u3 + 2*u4)*x*y^2"
       " + (-3*u1^4 + 3*u1^2*u2 - u2^2 - 4*u1*u3 + u4)*y^3"},
      {"phi", 4,
       "u1 + (u1^3 - u1*u2 + u3)*x^2 + (u1^4 - u1^2*u2 + u1*u3)*x^3"
       " + (3*u1^5 - 2*u1^3*u2 + 2*u1*u2^2 + 4*u1^2*u3 - u2*u3 - u1*u4 + 2*u5)*x^4"},
      {"x-over-chi", 4,
       "-1 + u1*x + (u1^3 - u1*u2 + u3)*x^3 + (u1^4 - u1^2*u2 + u1*u3)*x^4"},
      {"phi-of-sum", 4,
       "u1 + (u1^3 - u1*u2 + u3)*x^2 + (2*u1^3 - 2*u1*u2 + 2*u3)*x*y"
       " + (u1^3 - u1*u2 + u3)*y^2 + (u1^4 - u1^2*u2 + u1*u3)*x^3"
       " + (u1^4 - u1^2*u2 + u1*u3)*x^2*y + (u1^4 - u1^2*u2 + u1*u3)*x*y^2"
       " + (u1^4 - u1^2*u2 + u1*u3)*y^3"
       " + (3*u1^5 - 2*u1^3*u2 + 2*u1*u2^2 + 4*u1^2*u3 - u2*u3 - u1*u4 + 2*u5)*x^4"
       " + (11*u1^5 - 9*u1^3*u2 + 10*u1*u2^2 + 15*u1^2*u3 - 6*u2*u3 - 4*u1*u4 + 8*u5)*x^3*y"
       " + (17*u1^5 - 15*u1^3*u2 + 16*u1*u2^2 + 23*u1^2*u3 - 10*u2*u3 - 6*u1*u4 + 12*u5)"
       "*x^2*y^2"
       " + (11*u1^5 - 9*u1^3*u2 + 10*u1*u2^2 + 15*u1^2*u3 - 6*u2*u3 - 4*u1*u4 + 8*u5)*x*y^3"
       " + (3*u1^5 - 2*u1^3*u2 + 2*u1*u2^2 + 4*u1^2*u3 - u2*u3 - u1*u4 + 2*u5)*y^4"},
      {"b", 3,
       "u1^2 - u2 + (u1^3 - u1*u2 + u3)*x + (2*u1^3 - 2*u1*u2 + 2*u3)*y"
       " + (5*u1^4 - 5*u1^2*u2 + u2^2 + 6*u1*u3 - u4)*x^2"
       " + (4*u1^4 - 4*u1^2*u2 + u2^2 + 5*u1*u3 - u4)*x*y"
       " + (5*u1^4 - 5*u1^2*u2 + u2^2 + 6*u1*u3 - u4)*y^2"
       " + (10*u1^5 - 9*u1^3*u2 + 6*u1*u2^2 + 13*u1^2*u3 - 3*u2*u3 - 3*u1*u4 + 4*u5)*x^3"
       " + (17*u1^5 - 15*u1^3*u2 + 15*u1*u2^2 + 23*u1^2*u3 - 9*u2*u3 - 6*u1*u4 + 11*u5)"
       "*x^2*y"
       " + (14*u1^5 - 12*u1^3*u2 + 12*u1*u2^2 + 19*u1^2*u3 - 7*u2*u3 - 5*u1*u4 + 9*u5)"
       "*x*y^2"
       " + (12*u1^5 - 10*u1^3*u2 + 8*u1*u2^2 + 16*u1^2*u3 - 4*u2*u3 - 4*u1*u4 + 6*u5)*y^3"},
      {"rank3-bundle-series", 3,
       "u2 + (-3*u1^4 + 3*u1^2*u2 - u2^2 - 4*u1*u3 + u4)*x^2"
       " + (2*u1*u2^2 - 2*u2*u3 + 2*u5)*x^3"},
  };
  return table;
}

// ---------------------------------------------------------------------------
// Geometry oracles over u1..u5.
// ---------------------------------------------------------------------------
struct NamedClass {
  const char* name;
  const char* value;
};

inline const std::vector<NamedClass>& geometry_table() {
  static const std::vector<NamedClass> table = {
      {"P1", "u1"},
      {"P2", "u2"},
      {"P3", "u1^3 + 2*u3"},
      {"P4", "u4"},
      {"P5", "4*u1^3*u2 + 3*u1*u2^2 + 6*u5"},
      {"Bl_pt P2", "u1^2"},
      {"Bl_pt P3", "u1^3 + u3"},
      {"H_{1,1}", "u1"},
      {"H_{2,1}", "u1^2"},
      {"a33 - a51 - a42",
       "-9*u1^5 + 14*u1^3*u2 - 5*u1*u2^2 - 9*u1^2*u3 + 3*u2*u3 + u1*u4 + u5"},
  };
  return table;
}

// ---------------------------------------------------------------------------
// Specialized-theory spot values.
// ---------------------------------------------------------------------------

// Multiplicative theory (system "kbeta").
struct KTheoryEntry {
  int n;
  std::vector<int> d;
  const char* value;
};

inline const std::vector<KTheoryEntry>& ktheory_table() {
  static const std::vector<KTheoryEntry> table = {
      {6, {}, "beta^3"},
      {10, {2, 1}, "7*beta^4"},
  };
  return table;
}

// Multiplicative theory with the twisted boundary rule.
inline const std::vector<KTheoryEntry>& ktheory_twisted_table() {
  static const std::vector<KTheoryEntry> table = {
      {6, {3}, "1"},
      {6, {2}, "3*beta"},
      {7, {1, 1}, "12*beta^2"},
  };
  return table;
}

// Additive theory (system "empty"): scalar values.
struct ChowEntry {
  int n;
  std::vector<int> d;
  long long value;
};

inline const std::vector<ChowEntry>& chow_table() {
  static const std::vector<ChowEntry> table = {
      {9, {2, 2, 2}, 90},
  };
  return table;
}

}  // namespace m0n::reference
