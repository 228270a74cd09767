// Zassenhaus factorization over Z.
//
// The square-free part is factored modulo a small odd prime by distinct- and
// equal-degree factorization, the modular factors are lifted by quadratic
// Hensel steps along a binary tree, and true factors are recovered by trying
// subsets of lifted factors with exact trial division.

#include <algorithm>
#include <cstdint>
#include <random>

#include "rmeasure/intpoly.hpp"

namespace rmeasure {

namespace {

// ---------------------------------------------------------------------------
// Polynomials over F_p, p an odd prime below 2^31.

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

struct Field {
  u64 p;

  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }

  static void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  static int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

  ModPoly reduce(const IntPolynomial& f) const {
    ModPoly out(f.coeffs().size());
    BigInt r;
    for (std::size_t i = 0; i < out.size(); ++i) {
      mpz_fdiv_r_ui(r.get_mpz_t(), f.coeffs()[i].get_mpz_t(), p);
      out[i] = r.get_ui();
    }
    trim(out);
    return out;
  }

  ModPoly sub(const ModPoly& a, const ModPoly& b) const {
    ModPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = sub(out[i], b[i]);
    trim(out);
    return out;
  }

  ModPoly mul(const ModPoly& a, const ModPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ModPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    trim(out);
    return out;
  }

  ModPoly scale(ModPoly a, u64 s) const {
    for (auto& c : a) c = mul(c, s);
    trim(a);
    return a;
  }

  // a = q b + r
  void divrem(const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r) const {
    r = a;
    int db = deg(b);
    if (deg(a) < db) {
      q.clear();
      return;
    }
    q.assign(static_cast<std::size_t>(deg(a) - db + 1), 0);
    u64 il = inv(b.back());
    for (int k = deg(a); k >= db; --k) {
      u64 c = mul(r[static_cast<std::size_t>(k)], il);
      q[static_cast<std::size_t>(k - db)] = c;
      if (!c) continue;
      for (int j = 0; j <= db; ++j) {
        auto idx = static_cast<std::size_t>(k - db + j);
        r[idx] = sub(r[idx], mul(c, b[static_cast<std::size_t>(j)]));
      }
    }
    r.resize(static_cast<std::size_t>(db));
    trim(r);
    trim(q);
  }

  ModPoly rem(const ModPoly& a, const ModPoly& b) const {
    ModPoly q, r;
    divrem(a, b, q, r);
    return r;
  }

  ModPoly quo(const ModPoly& a, const ModPoly& b) const {
    ModPoly q, r;
    divrem(a, b, q, r);
    return q;
  }

  ModPoly monic(ModPoly a) const {
    if (a.empty()) return a;
    return scale(std::move(a), inv(a.back()));
  }

  ModPoly gcd(ModPoly a, ModPoly b) const {
    while (!b.empty()) {
      ModPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(std::move(a));
  }

  // s a + t b = gcd (monic)
  ModPoly xgcd(ModPoly a, ModPoly b, ModPoly& s, ModPoly& t) const {
    ModPoly s0{1}, s1, t0, t1{1};
    while (!b.empty()) {
      ModPoly q, r;
      divrem(a, b, q, r);
      a = std::move(b);
      b = std::move(r);
      ModPoly s2 = sub(s0, mul(q, s1));
      ModPoly t2 = sub(t0, mul(q, t1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    u64 il = inv(a.back());
    s = scale(s0, il);
    t = scale(t0, il);
    return scale(a, il);
  }

  ModPoly derivative(const ModPoly& a) const {
    if (a.size() <= 1) return {};
    ModPoly d(a.size() - 1);
    for (std::size_t k = 1; k < a.size(); ++k) d[k - 1] = mul(a[k], k % p);
    trim(d);
    return d;
  }

  ModPoly powmod(ModPoly base, const BigInt& e, const ModPoly& m) const {
    ModPoly r{1};
    base = rem(base, m);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = rem(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base), m);
    }
    return r;
  }
};

// Distinct-degree factorization of a monic square-free polynomial.
std::vector<std::pair<ModPoly, int>> distinct_degree(const Field& F, ModPoly f) {
  std::vector<std::pair<ModPoly, int>> out;
  const ModPoly x{0, 1};
  ModPoly h = x;
  BigInt pp = static_cast<unsigned long>(F.p);
  for (int i = 1; 2 * i <= Field::deg(f); ++i) {
    h = F.powmod(h, pp, f);
    ModPoly g = F.gcd(F.sub(h, x), f);
    if (Field::deg(g) > 0) {
      f = F.quo(f, g);
      h = F.rem(h, f);
      out.emplace_back(std::move(g), i);
    }
  }
  if (Field::deg(f) > 0) {
    int d = Field::deg(f);
    out.emplace_back(std::move(f), d);
  }
  return out;
}

// Equal-degree splitting (Cantor-Zassenhaus); every irreducible factor of f has degree d.
void equal_degree(const Field& F, const ModPoly& f, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  int n = Field::deg(f);
  if (n == d) {
    out.push_back(f);
    return;
  }
  BigInt e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, F.p - 1);
  while (true) {
    ModPoly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = dist(rng);
    Field::trim(a);
    if (Field::deg(a) < 1) continue;
    ModPoly g = F.gcd(a, f);
    if (Field::deg(g) > 0 && Field::deg(g) < n) {
      equal_degree(F, g, d, rng, out);
      equal_degree(F, F.quo(f, g), d, rng, out);
      return;
    }
    ModPoly b = F.sub(F.powmod(a, e, f), ModPoly{1});
    g = F.gcd(b, f);
    if (Field::deg(g) > 0 && Field::deg(g) < n) {
      equal_degree(F, g, d, rng, out);
      equal_degree(F, F.quo(f, g), d, rng, out);
      return;
    }
  }
}

std::vector<ModPoly> factor_mod_p(const Field& F, const ModPoly& f_monic) {
  std::mt19937_64 rng(0x5eedULL + F.p);
  std::vector<ModPoly> out;
  for (auto& [g, d] : distinct_degree(F, f_monic)) equal_degree(F, g, d, rng, out);
  return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials reduced modulo m, ascending coefficients.

using ZPoly = std::vector<BigInt>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void zmod(ZPoly& a, const BigInt& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  ztrim(out);
  return out;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  ztrim(out);
  return out;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  ztrim(out);
  return out;
}

// a = q h + r with h monic.
void zdivrem_monic(const ZPoly& a, const ZPoly& h, ZPoly& q, ZPoly& r) {
  r = a;
  int dh = static_cast<int>(h.size()) - 1;
  int da = static_cast<int>(a.size()) - 1;
  if (da < dh) {
    q.clear();
    return;
  }
  q.assign(static_cast<std::size_t>(da - dh + 1), 0);
  for (int k = da; k >= dh; --k) {
    BigInt c = r[static_cast<std::size_t>(k)];
    q[static_cast<std::size_t>(k - dh)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dh; ++j)
      mpz_submul(r[static_cast<std::size_t>(k - dh + j)].get_mpz_t(), c.get_mpz_t(),
                 h[static_cast<std::size_t>(j)].get_mpz_t());
  }
  r.resize(static_cast<std::size_t>(dh));
  ztrim(r);
  ztrim(q);
}

ZPoly from_mod(const ModPoly& a) {
  ZPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<unsigned long>(a[i]);
  return out;
}

ModPoly to_mod(const Field& F, const ZPoly& a) {
  ModPoly out(a.size());
  BigInt r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_fdiv_r_ui(r.get_mpz_t(), a[i].get_mpz_t(), F.p);
    out[i] = r.get_ui();
  }
  Field::trim(out);
  return out;
}

// One quadratic Hensel step: from f = g h, s g + t h = 1 (mod m) to mod m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const BigInt& m) {
  BigInt m2 = m * m;
  ZPoly e = zsub(f, zmul(g, h));
  zmod(e, m2);
  ZPoly q, r;
  ZPoly se = zmul(s, e);
  zmod(se, m2);
  zdivrem_monic(se, h, q, r);
  ZPoly gs = zadd(zadd(g, zmul(t, e)), zmul(q, g));
  zmod(gs, m2);
  ZPoly hs = zadd(h, r);
  zmod(hs, m2);

  ZPoly b = zsub(zadd(zmul(s, gs), zmul(t, hs)), ZPoly{1});
  zmod(b, m2);
  ZPoly c, d;
  ZPoly sb = zmul(s, b);
  zmod(sb, m2);
  zdivrem_monic(sb, hs, c, d);
  ZPoly ss = zsub(s, d);
  zmod(ss, m2);
  ZPoly ts = zsub(zsub(t, zmul(t, b)), zmul(c, gs));
  zmod(ts, m2);

  g = std::move(gs);
  h = std::move(hs);
  s = std::move(ss);
  t = std::move(ts);
}

// Lifts f = lc(f) prod u_i (mod p) to monic factors mod p^(2^steps).
void multifactor_lift(const Field& F, const ZPoly& f, const std::vector<ModPoly>& u, int steps,
                      std::vector<ZPoly>& out) {
  BigInt M = static_cast<unsigned long>(F.p);
  for (int i = 0; i < steps; ++i) M *= M;
  if (u.size() == 1) {
    BigInt il;
    mpz_invert(il.get_mpz_t(), f.back().get_mpz_t(), M.get_mpz_t());
    ZPoly g = f;
    for (auto& c : g) c *= il;
    zmod(g, M);
    out.push_back(std::move(g));
    return;
  }
  std::size_t half = u.size() / 2;
  std::vector<ModPoly> left(u.begin(), u.begin() + static_cast<long>(half));
  std::vector<ModPoly> right(u.begin() + static_cast<long>(half), u.end());

  ModPoly gm{1};
  {
    ModPoly lcp = to_mod(F, ZPoly{f.back()});
    gm = lcp;
  }
  for (const auto& v : left) gm = F.mul(gm, v);
  ModPoly hm{1};
  for (const auto& v : right) hm = F.mul(hm, v);
  ModPoly sm, tm;
  F.xgcd(gm, hm, sm, tm);
  // Normalize degrees: deg s < deg h, deg t < deg g.
  sm = F.rem(sm, hm);
  ModPoly rr;
  F.divrem(F.sub(ModPoly{1}, F.mul(sm, gm)), hm, tm, rr);

  ZPoly g = from_mod(gm), h = from_mod(hm), s = from_mod(sm), t = from_mod(tm);
  BigInt m = static_cast<unsigned long>(F.p);
  for (int i = 0; i < steps; ++i) {
    hensel_step(f, g, h, s, t, m);
    m *= m;
  }
  multifactor_lift(F, g, left, steps, out);
  multifactor_lift(F, h, right, steps, out);
}

ZPoly symmetric(ZPoly a, const BigInt& M) {
  BigInt half = M / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
    if (c > half) c -= M;
  }
  ztrim(a);
  return a;
}

bool is_prime_small(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Square-free, primitive, positive leading coefficient, f(0) != 0, degree >= 2.
std::vector<IntPolynomial> factor_squarefree(const IntPolynomial& f) {
  const int n = f.degree();

  // Pick the prime giving the fewest modular factors among a few candidates.
  std::vector<ModPoly> best;
  u64 best_p = 0;
  int tried = 0;
  for (u64 p = 3; tried < 6 && p < 100000; p += 2) {
    if (!is_prime_small(p)) continue;
    Field F{p};
    ModPoly fm = F.reduce(f);
    if (Field::deg(fm) != n) continue;
    if (Field::deg(F.gcd(fm, F.derivative(fm))) != 0) continue;
    ++tried;
    auto fac = factor_mod_p(F, F.monic(fm));
    if (best_p == 0 || fac.size() < best.size()) {
      best = std::move(fac);
      best_p = p;
    }
    if (best.size() == 1) break;
  }
  if (best_p == 0) throw std::runtime_error("factor: no suitable prime found");
  if (best.size() == 1) return {f};
  Field F{best_p};

  // Coefficient bound for lc(f) times any factor of f.
  BigInt norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  BigInt norm = sqrt(norm2) + 1;
  BigInt bound = abs(f.leading()) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
  BigInt target = 2 * bound + 1;

  int steps = 0;
  BigInt M = static_cast<unsigned long>(best_p);
  while (M < target) {
    M *= M;
    ++steps;
  }

  std::sort(best.begin(), best.end(), [](const ModPoly& a, const ModPoly& b) { return a.size() < b.size(); });
  std::vector<ZPoly> lifted;
  multifactor_lift(F, f.coeffs(), best, steps, lifted);

  // Recombination by subsets of increasing size.
  std::vector<IntPolynomial> out;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  IntPolynomial rest = f;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> pick(s);
    for (std::size_t i = 0; i < s; ++i) pick[i] = i;
    while (true) {
      ZPoly g{rest.leading()};
      for (std::size_t i : pick) {
        g = zmul(g, lifted[remaining[i]]);
        zmod(g, M);
      }
      IntPolynomial cand = IntPolynomial(symmetric(g, M)).primitive_part();
      if (cand.degree() > 0) {
        if (auto q = exact_quotient(rest, cand)) {
          out.push_back(cand);
          rest = q->primitive_part();
          std::vector<std::size_t> keep;
          for (std::size_t i = 0; i < remaining.size(); ++i) {
            if (std::find(pick.begin(), pick.end(), i) == pick.end()) keep.push_back(remaining[i]);
          }
          remaining = std::move(keep);
          found = true;
          break;
        }
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && pick[k - 1] == remaining.size() - s + (k - 1)) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t j = k; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rest.degree() > 0) out.push_back(rest);
  return out;
}

}  // namespace

Factorization factor(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("factor of the zero polynomial");
  Factorization result;
  result.unit = p.content();
  if (p.leading() < 0) result.unit = -result.unit;
  if (p.degree() == 0) return result;

  IntPolynomial f = p.primitive_part();
  int zeros = 0;
  while (f.coeff(0) == 0) {
    std::vector<BigInt> c(f.coeffs().begin() + 1, f.coeffs().end());
    f = IntPolynomial(std::move(c));
    ++zeros;
  }
  if (zeros > 0) result.factors.emplace_back(IntPolynomial::x(), zeros);

  for (auto& [s, mult] : squarefree_decomposition(f)) {
    if (s.degree() == 1) {
      result.factors.emplace_back(s, mult);
      continue;
    }
    for (auto& g : factor_squarefree(s)) result.factors.emplace_back(std::move(g), mult);
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  return result;
}

bool is_irreducible(const IntPolynomial& p) {
  if (p.degree() < 1) return false;
  auto fac = factor(p);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace rmeasure
