#include "rmeasure/smythseq.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace rmeasure {

Real g_map(const Real& x) {
  if (!(x > 0)) throw std::invalid_argument("g_map needs x > 0");
  return (2 + x + sqrt(x * x + 4 * x)) / 2;
}

IntPolynomial smyth_minimal_poly(int n) {
  if (n < 0 || n > kSmythMaxLevel) throw std::invalid_argument("level out of range");
  IntPolynomial P = parse_polynomial("x - 1");
  const IntPolynomial sq = parse_polynomial("x^2 - 2x + 1");
  for (int lv = 1; lv <= n; ++lv) {
    // x^D P(y) with y = (x-1)^2 / x, by Horner in y
    const int D = P.degree();
    IntPolynomial H = IntPolynomial::constant(P.coeff(static_cast<std::size_t>(D)));
    for (int j = D - 1; j >= 0; --j) {
      H = H * sq;
      H += IntPolynomial::monomial(P.coeff(static_cast<std::size_t>(j)), static_cast<std::size_t>(D - j));
    }
    P = H;
  }
  return P;
}

SmythLevel level(int n, bool with_minimal_poly, unsigned bits) {
  if (n < 0 || n > kSmythMaxLevel) throw std::invalid_argument("level out of range (0..20)");
  PrecisionGuard guard(std::max(bits, 64u));
  SmythLevel lv;
  lv.n = n;
  std::vector<Real> cur{Real(1)};
  for (int i = 1; i <= n; ++i) {
    std::vector<Real> next;
    next.reserve(cur.size() * 2);
    for (const auto& y : cur) {
      Real g = g_map(y);
      next.push_back(1 / g);
      next.push_back(std::move(g));
    }
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end());
  lv.conjugates = std::move(cur);
  if (with_minimal_poly) lv.minimal_poly = smyth_minimal_poly(n);
  return lv;
}

SmythLevel level(int n) { return level(n, n <= kSmythMinimalPolyDefault); }

RBound r_bound_check(const SmythLevel& lv) {
  RBound out;
  out.n = lv.n;
  Real s = 0;
  for (const auto& c : lv.conjugates)
    if (c > 1) s += c;
  out.r = s / Real(lv.conjugates.size());
  out.bound = (13 + sqrt(Real(5))) / 8 - pow(Real(2), -lv.n);
  out.ok = out.r <= out.bound + Real(kSmythBoundSlack);
  return out;
}

RBound r_bound_check(int n) { return r_bound_check(level(n, false)); }

Distribution distribution_check(const SmythLevel& lv) {
  if (lv.n < 2) throw std::invalid_argument("distribution_check needs n >= 2");
  Distribution d;
  d.n = lv.n;
  const Real c1 = (3 - sqrt(Real(5))) / 2;
  for (const auto& c : lv.conjugates) {
    if (c > 1) {
      ++d.above_one;
    } else if (c < 1) {
      ++d.below_one;
      if (c > c1)
        ++d.between_c1_and_one;
      else if (c < c1)
        ++d.below_c1;
    }
  }
  const long half = 1L << (lv.n - 1), quarter = 1L << (lv.n - 2);
  d.ok = d.above_one == half && d.below_one == half && d.between_c1_and_one == quarter && d.below_c1 == quarter;
  return d;
}

Distribution distribution_check(int n) { return distribution_check(level(n, false)); }

Interlacing interlacing(int n) {
  if (n < 1) throw std::invalid_argument("interlacing needs n >= 1");
  SmythLevel cur = level(n, false);
  std::vector<Real> prev;
  for (int k = 0; k < n; ++k) {
    auto lv = level(k, false);
    prev.insert(prev.end(), lv.conjugates.begin(), lv.conjugates.end());
  }
  std::sort(prev.begin(), prev.end());
  Interlacing out;
  out.n = n;
  out.earlier = static_cast<long>(prev.size());
  for (const auto& b : prev) {
    auto it = std::lower_bound(cur.conjugates.begin(), cur.conjugates.end(), b);
    if (it != cur.conjugates.begin() && it != cur.conjugates.end()) ++out.straddled;
  }
  return out;
}

std::string smyth_table(int max_n, int digits) {
  std::ostringstream os;
  os << "n\tdegree\ttrace\tr\tbound\tok\n";
  for (int n = 0; n <= max_n; ++n) {
    SmythLevel lv = level(n, false);
    RBound rb = r_bound_check(lv);
    Real tr = 0;
    for (const auto& c : lv.conjugates) tr += c;
    os << n << '\t' << lv.conjugates.size() << '\t' << std::setprecision(digits) << tr << '\t' << rb.r << '\t' << rb.bound
       << '\t' << (rb.ok ? "ok" : "FAIL") << '\n';
  }
  return os.str();
}

}  // namespace rmeasure
