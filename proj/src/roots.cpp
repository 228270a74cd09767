#include "rmeasure/roots.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace rmeasure {

namespace {

using boost::multiprecision::abs;

// Positive root of |a_n| x^n - sum_{k<n} |a_k| x^k; every root has modulus
// at most this value.
double cauchy_bound(const IntPolynomial& f) {
  const int n = f.degree();
  std::vector<double> la(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) la[static_cast<std::size_t>(k)] = std::fabs(f.coeff(static_cast<std::size_t>(k)).get_d());
  // g(x) = |a_n| - sum |a_k| x^(k-n) is increasing in x.
  auto g = [&](double x) {
    double s = la[static_cast<std::size_t>(n)];
    for (int k = 0; k < n; ++k) s -= la[static_cast<std::size_t>(k)] * std::pow(x, k - n);
    return s;
  };
  double hi = 1.0;
  for (int k = 0; k < n; ++k) hi = std::max(hi, 1.0 + la[static_cast<std::size_t>(k)] / la[static_cast<std::size_t>(n)]);
  double lo = 0.0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (g(mid) < 0 ? lo : hi) = mid;
  }
  return hi * (1 + 1e-12);
}

void horner_with_derivative(const std::vector<Real>& a, const Complex& z, Complex& p, Complex& dp) {
  p = Complex(a.back());
  dp = Complex();
  for (std::size_t k = a.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z;
    p.re += a[k];
  }
}

std::optional<std::vector<Root>> aberth(const IntPolynomial& f, unsigned bits, double target) {
  PrecisionGuard guard(bits);
  const int n = f.degree();
  std::vector<Real> a(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) a[static_cast<std::size_t>(k)] = to_real(f.coeff(static_cast<std::size_t>(k)));

  std::vector<Complex> z(static_cast<std::size_t>(n));
  {
    Real radius = cauchy_bound(f);
    Real two_pi = 2 * pi();
    for (int k = 0; k < n; ++k) z[static_cast<std::size_t>(k)] = Complex::polar(radius, two_pi * k / n + Real(0.7));
  }

  Real tiny = ldexp(Real(1), -static_cast<int>(bits * 6 / 10));
  int extra = -1;
  const int max_iter = 2000 + 50 * n;
  Complex p, dp;
  for (int iter = 0; iter < max_iter && extra != 0; ++iter) {
    Real worst = 0;
    for (int i = 0; i < n; ++i) {
      Complex& zi = z[static_cast<std::size_t>(i)];
      horner_with_derivative(a, zi, p, dp);
      if (p.re == 0 && p.im == 0) continue;
      Complex N = p / dp;
      Complex S;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        S += Complex(Real(1)) / (zi - z[static_cast<std::size_t>(j)]);
      }
      Complex w = N / (Complex(Real(1)) - N * S);
      zi -= w;
      Real scale = max(zi.abs(), Real(1));
      Real rel = w.abs() / scale;
      if (rel > worst) worst = rel;
    }
    if (extra > 0) {
      --extra;
    } else if (worst < tiny) {
      extra = 3;
    }
  }
  if (extra != 0) return std::nullopt;

  // Inclusion radii n |p(z_i)| / (|a_n| prod |z_i - z_j|).
  std::vector<Root> roots(static_cast<std::size_t>(n));
  Real lc = abs(a.back());
  for (int i = 0; i < n; ++i) {
    const Complex& zi = z[static_cast<std::size_t>(i)];
    horner_with_derivative(a, zi, p, dp);
    Real den = lc;
    for (int j = 0; j < n; ++j)
      if (j != i) den *= (zi - z[static_cast<std::size_t>(j)]).abs();
    if (den == 0) return std::nullopt;
    Root& r = roots[static_cast<std::size_t>(i)];
    r.z = zi;
    r.radius = n * p.abs() / den;
    if (!(r.radius < target)) return std::nullopt;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto& ri = roots[static_cast<std::size_t>(i)];
      const auto& rj = roots[static_cast<std::size_t>(j)];
      if (!((ri.z - rj.z).abs() > ri.radius + rj.radius)) return std::nullopt;
    }

  // Real coefficients: snap near-real roots, pair the others exactly.
  std::vector<std::size_t> upper, lower;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    Root& r = roots[i];
    if (abs(r.z.im) <= r.radius) {
      r.z.im = 0;
      r.is_real = true;
    } else {
      (r.z.im > 0 ? upper : lower).push_back(i);
    }
  }
  if (upper.size() != lower.size()) return std::nullopt;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t u : upper) {
    std::size_t best = roots.size();
    Real best_d = 0;
    for (std::size_t l : lower) {
      if (used[l]) continue;
      Real d = (roots[l].z - roots[u].z.conj()).abs();
      if (best == roots.size() || d < best_d) {
        best = l;
        best_d = d;
      }
    }
    if (!(best_d <= roots[u].radius + roots[best].radius)) return std::nullopt;
    used[best] = true;
    Complex mid{(roots[u].z.re + roots[best].z.re) / 2, (roots[u].z.im - roots[best].z.im) / 2};
    Real rad = max(roots[u].radius, roots[best].radius);
    roots[u].z = mid;
    roots[best].z = mid.conj();
    roots[u].radius = roots[best].radius = rad;
  }
  return roots;
}

std::vector<Root> solve_squarefree(const IntPolynomial& f, const RootOptions& opt, unsigned& used_bits) {
  if (f.degree() == 1) {
    PrecisionGuard guard(opt.start_bits);
    Root r;
    r.z = Complex(-to_real(f.coeff(0)) / to_real(f.coeff(1)));
    r.radius = 0;
    r.is_real = true;
    return {r};
  }
  for (unsigned bits = opt.start_bits; bits <= opt.max_bits; bits *= 2) {
    if (auto r = aberth(f, bits, opt.target_radius)) {
      used_bits = std::max(used_bits, bits);
      return *r;
    }
  }
  throw std::runtime_error("all_roots: certification failed for " + to_string(f));
}

}  // namespace

std::vector<double> RootSet::positive_real_roots() const {
  std::vector<double> out;
  for (const auto& r : roots)
    if (r.is_real && r.z.re > 0) out.push_back(r.z.re.convert_to<double>());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Real RootSet::max_radius() const {
  Real m = 0;
  for (const auto& r : roots)
    if (r.radius > m) m = r.radius;
  return m;
}

RootSet all_roots(const IntPolynomial& p, const RootOptions& opt) {
  if (p.degree() < 1) throw std::invalid_argument("all_roots needs degree >= 1");
  RootSet out;
  out.precision_bits = opt.start_bits;
  IntPolynomial f = p.primitive_part();
  int zeros = 0;
  while (f.coeff(static_cast<std::size_t>(zeros)) == 0) ++zeros;
  if (zeros > 0) {
    std::vector<BigInt> c(f.coeffs().begin() + zeros, f.coeffs().end());
    f = IntPolynomial(std::move(c));
    PrecisionGuard guard(opt.start_bits);
    for (int i = 0; i < zeros; ++i) {
      Root r;
      r.radius = 0;
      r.is_real = true;
      out.roots.push_back(r);
    }
  }
  for (const auto& [s, mult] : squarefree_decomposition(f)) {
    auto rs = solve_squarefree(s, opt, out.precision_bits);
    for (int m = 0; m < mult; ++m) out.roots.insert(out.roots.end(), rs.begin(), rs.end());
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const Root& a, const Root& b) {
    if (a.z.re != b.z.re) return a.z.re < b.z.re;
    return a.z.im < b.z.im;
  });
  return out;
}

MeasureReport measure(const IntPolynomial& p) { return measure(p, all_roots(p)); }

MeasureReport measure(const IntPolynomial& p, const RootSet& roots) {
  if (p.degree() < 1) throw std::invalid_argument("measure needs degree >= 1");
  PrecisionGuard guard(std::max(roots.precision_bits, kDefaultPrecisionBits));
  MeasureReport m;
  m.degree = p.degree();
  m.monic = p.leading() == 1 || p.leading() == -1;
  m.trace = 0;
  m.r_measure = 0;
  m.mahler = abs(to_real(p.leading()));
  m.sector_half_angle = 0;
  m.totally_positive = totally_positive(roots);
  const Real one_plus = 1 + Real(kUnitCircleTolerance);
  const Real one = 1;
  for (const auto& r : roots.roots) {
    m.trace += r.z.re;
    Real mod = r.z.abs();
    if (mod > one_plus) m.r_measure += mod;
    if (mod > one) m.mahler *= mod;
    if (mod == 0) {
      m.has_zero_root = true;
      continue;
    }
    Real ang = abs(radians_to_degrees(r.z.arg()));
    if (ang > m.sector_half_angle) m.sector_half_angle = ang;
  }
  m.abs_trace = m.trace / m.degree;
  m.abs_r = m.r_measure / m.degree;
  return m;
}

bool totally_positive(const RootSet& roots) {
  for (const auto& r : roots.roots)
    if (!r.is_real || !(r.z.re > 0)) return false;
  return !roots.roots.empty();
}

bool in_sector(const RootSet& roots, double theta_degrees, double tol_degrees) {
  Real limit = Real(theta_degrees) + tol_degrees;
  for (const auto& r : roots.roots) {
    if (r.z.re == 0 && r.z.im == 0) return false;
    if (abs(radians_to_degrees(r.z.arg())) > limit) return false;
  }
  return true;
}

bool in_sector(const IntPolynomial& p, double theta_degrees, double tol_degrees) {
  return in_sector(all_roots(p), theta_degrees, tol_degrees);
}

}  // namespace rmeasure
