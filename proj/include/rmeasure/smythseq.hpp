#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rmeasure/intpoly.hpp"
#include "rmeasure/real.hpp"

namespace rmeasure {

/// (2 + x + sqrt(x^2 + 4x)) / 2 for x > 0; the larger root of t^2 - (2+x)t + 1.
Real g_map(const Real& x);

inline constexpr int kSmythMaxLevel = 20;
/// Above this level the minimal polynomial is skipped unless asked for.
inline constexpr int kSmythMinimalPolyDefault = 10;

struct SmythLevel {
  int n = 0;
  std::vector<Real> conjugates;  // ascending, 2^n entries
  std::optional<IntPolynomial> minimal_poly;
};

/// Conjugates of c_n at `bits` precision; the minimal polynomial from
/// P_n(x) = x^{2^{n-1}} P_{n-1}(x + 1/x - 2), P_0 = x - 1.
SmythLevel level(int n, bool with_minimal_poly, unsigned bits = 128);
SmythLevel level(int n);

IntPolynomial smyth_minimal_poly(int n);

struct RBound {
  int n = 0;
  Real r;
  Real bound;
  bool ok = false;
};
inline constexpr double kSmythBoundSlack = 1e-9;
/// r(c_n) = (sum of conjugates > 1) / 2^n against (13 + sqrt 5)/8 - 2^-n.
RBound r_bound_check(const SmythLevel& lv);
RBound r_bound_check(int n);

struct Distribution {
  int n = 0;
  long above_one = 0;
  long below_one = 0;
  long between_c1_and_one = 0;
  long below_c1 = 0;
  bool ok = false;
};
/// Requires n >= 2.
Distribution distribution_check(const SmythLevel& lv);
Distribution distribution_check(int n);

struct Interlacing {
  int n = 0;
  long earlier = 0;     // distinct conjugates of c_0..c_{n-1}
  long straddled = 0;   // of those, how many have c_n conjugates on both sides
  bool full() const { return straddled == earlier; }
};
/// Diagnostic only; nothing is asserted from it. Requires n >= 1.
Interlacing interlacing(int n);

/// TSV `n  degree  trace  r  bound  ok` for levels 0..max_n.
std::string smyth_table(int max_n, int digits = 6);

}  // namespace rmeasure
