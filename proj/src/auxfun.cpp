#include "rmeasure/auxfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>

#include <boost/math/tools/minima.hpp>

#include "rmeasure/roots.hpp"

namespace rmeasure {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

WeightKind WeightKind::sector(double theta_degrees) {
  if (!(theta_degrees > 0.0 && theta_degrees < 90.0))
    throw std::invalid_argument("sector angle must lie strictly between 0 and 90 degrees");
  return WeightKind(Kind::SectorRay, theta_degrees);
}

WeightKind WeightKind::ray(double theta_degrees) {
  if (theta_degrees == 0.0) return positive_real();
  return sector(theta_degrees);
}

std::string WeightKind::describe() const {
  if (kind_ == Kind::PositiveReal) return "positive-real";
  return "sector " + format_coefficient(theta_);
}

double AuxFunction::t() const {
  double s = 0;
  for (const auto& term : terms) s += term.c * term.q.degree();
  return s;
}

int AuxFunction::r() const {
  int s = 0;
  for (const auto& term : terms)
    if (term.c > 0) s += term.q.degree();
  return s;
}

void AuxFunction::validate() const {
  for (const auto& term : terms) {
    if (!(term.c >= 0) || !std::isfinite(term.c)) throw std::invalid_argument("auxiliary coefficients must be finite and >= 0");
    if (term.q.is_zero()) throw std::invalid_argument("auxiliary polynomial must be nonzero");
  }
}

std::vector<IntPolynomial> AuxFunction::polynomials() const {
  std::vector<IntPolynomial> out;
  for (const auto& term : terms) out.push_back(term.q);
  return out;
}

std::vector<double> AuxFunction::coefficients() const {
  std::vector<double> out;
  for (const auto& term : terms) out.push_back(term.c);
  return out;
}

Real eval(const AuxFunction& f, const Real& x) {
  if (!(x > 0)) throw std::invalid_argument("auxiliary function evaluated at x <= 0");
  PrecisionGuard guard(std::max(current_precision_bits(), kDefaultPrecisionBits));
  Real xx = x;
  Real sum = 0;
  Complex z;
  bool sector = f.weight.is_sector();
  if (sector) z = Complex::polar(xx, degrees_to_radians(Real(f.weight.theta())));
  for (const auto& term : f.terms) {
    if (term.c == 0) continue;
    Real mod = sector ? eval_complex(term.q, z).abs() : abs(eval_real(term.q, xx));
    if (mod == 0) return std::numeric_limits<Real>::infinity();
    sum += Real(term.c) * log(mod);
  }
  Real w = xx > 1 ? xx : Real(0);
  return w - sum;
}

double eval(const AuxFunction& f, double x) { return eval(f, Real(x)).convert_to<double>(); }

// ---------------------------------------------------------------------------

RootedAux::RootedAux(const AuxFunction& f) : f_(f) {
  f_.validate();
  const double theta = f_.weight.is_sector() ? f_.weight.theta() * M_PI / 180.0 : 0.0;
  const double cr = std::cos(theta), sr = std::sin(theta);
  for (const auto& term : f_.terms) {
    Term t;
    t.c = term.c;
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, term.q.leading().get_mpz_t());
    t.log_lc = std::log(std::fabs(mant)) + static_cast<double>(exp) * M_LN2;
    if (term.q.degree() >= 1) {
      auto rs = all_roots(term.q);
      for (const auto& r : rs.roots) {
        double re = r.z.re.convert_to<double>(), im = r.z.im.convert_to<double>();
        // rho e^{-i theta}
        double a = re * cr + im * sr;
        double b = im * cr - re * sr;
        double mod = std::hypot(re, im);
        if (std::fabs(b) <= 1e-12 * std::max(1.0, mod)) b = 0.0;
        t.a.push_back(a);
        t.b.push_back(b);
      }
    }
    terms_.push_back(std::move(t));
  }
  // crossing and near lists depend on which coefficients are active
  std::set<double> cross, near;
  for (const auto& t : terms_) {
    if (t.c <= 0) continue;
    for (std::size_t i = 0; i < t.a.size(); ++i) {
      if (t.a[i] <= 0) continue;
      if (t.b[i] == 0.0) cross.insert(t.a[i]);
      if (std::fabs(t.b[i]) < 0.5) near.insert(t.a[i]);
    }
  }
  crossings_.assign(cross.begin(), cross.end());
  near_.assign(near.begin(), near.end());
}

RootedAux RootedAux::with_coefficients(const std::vector<double>& c) const {
  if (c.size() != terms_.size()) throw std::invalid_argument("coefficient count mismatch");
  RootedAux out = *this;
  for (std::size_t j = 0; j < c.size(); ++j) {
    out.terms_[j].c = c[j];
    out.f_.terms[j].c = c[j];
  }
  out.f_.validate();
  std::set<double> cross, near;
  for (const auto& t : out.terms_) {
    if (t.c <= 0) continue;
    for (std::size_t i = 0; i < t.a.size(); ++i) {
      if (t.a[i] <= 0) continue;
      if (t.b[i] == 0.0) cross.insert(t.a[i]);
      if (std::fabs(t.b[i]) < 0.5) near.insert(t.a[i]);
    }
  }
  out.crossings_.assign(cross.begin(), cross.end());
  out.near_.assign(near.begin(), near.end());
  return out;
}

double RootedAux::log_abs(std::size_t j, double x) const {
  const Term& t = terms_[j];
  double s = t.log_lc;
  for (std::size_t i = 0; i < t.a.size(); ++i) {
    double dx = x - t.a[i];
    double q = dx * dx + t.b[i] * t.b[i];
    if (q == 0.0) return -kInf;
    s += 0.5 * std::log(q);
  }
  return s;
}

std::vector<double> RootedAux::logs(double x) const {
  std::vector<double> out(terms_.size());
  for (std::size_t j = 0; j < terms_.size(); ++j) out[j] = log_abs(j, x);
  return out;
}

double RootedAux::value(double x) const {
  double s = weight_value(x);
  for (std::size_t j = 0; j < terms_.size(); ++j) {
    if (terms_[j].c <= 0) continue;
    double l = log_abs(j, x);
    if (l == -kInf) return kInf;
    s -= terms_[j].c * l;
  }
  return s;
}

void RootedAux::derivatives(double x, double& v, double& d1, double& d2) const {
  v = weight_value(x);
  d1 = x > 1.0 ? 1.0 : 0.0;
  d2 = 0;
  for (const auto& t : terms_) {
    if (t.c <= 0) continue;
    double l = t.log_lc, g1 = 0, g2 = 0;
    for (std::size_t i = 0; i < t.a.size(); ++i) {
      double dx = x - t.a[i];
      double b2 = t.b[i] * t.b[i];
      double q = dx * dx + b2;
      if (q == 0.0) {
        v = kInf;
        return;
      }
      l += 0.5 * std::log(q);
      g1 += dx / q;
      g2 += (b2 - dx * dx) / (q * q);
    }
    v -= t.c * l;
    d1 -= t.c * g1;
    d2 -= t.c * g2;
  }
}

// ---------------------------------------------------------------------------

double default_domain_cap(const AuxFunction& f) { return std::max(50.0, 2.0 * f.t()); }

namespace {

struct Candidate {
  double x;
  double value;
  bool upper_one;  // the limit at 1+ (weight 1), not attained
};

// Brent then safeguarded Newton on f'. Returns false if Newton never settles.
bool refine(const RootedAux& f, double lo, double hi, double& x, double& v) {
  auto fn = [&](double t) { return f.value(t); };
  std::uintmax_t max_iter = 200;
  auto res = boost::math::tools::brent_find_minima(fn, lo, hi, std::numeric_limits<double>::digits / 2, max_iter);
  x = res.first;
  v = res.second;
  bool settled = false;
  for (int it = 0; it < 40; ++it) {
    double val, d1, d2;
    f.derivatives(x, val, d1, d2);
    if (!(d2 > 0) || !std::isfinite(val)) break;
    double step = d1 / d2;
    double nx = x - step;
    if (nx <= lo || nx >= hi) break;
    double nv = f.value(nx);
    if (nv > v + 1e-13 * (1 + std::fabs(v))) break;
    x = nx;
    v = nv;
    if (std::fabs(step) < 1e-10) {
      settled = true;
      break;
    }
  }
  if (!settled) {
    // Brent's answer is acceptable when it sits at the bracket edge or the
    // slope is already negligible.
    double val, d1, d2;
    f.derivatives(x, val, d1, d2);
    settled = std::fabs(d1) < 1e-7 || x - lo < 1e-9 || hi - x < 1e-9;
  }
  return settled;
}

std::vector<double> piece_grid(double l, double r, double scale, const MinOptions& opt,
                               const std::vector<double>& near) {
  std::vector<double> xs;
  auto near_dist = [&](double x) {
    auto it = std::lower_bound(near.begin(), near.end(), x);
    double d = kInf;
    if (it != near.end()) d = std::min(d, *it - x);
    if (it != near.begin()) d = std::min(d, x - *(it - 1));
    return d;
  };
  // geometric approach to a tiny left end
  if (l < 1e-3) {
    double top = std::min(r, 1e-2);
    for (double x = std::max(l, 1e-300) * 10.0; x < top; x *= std::pow(10.0, 0.25 / scale)) xs.push_back(x);
  }
  double x = l;
  while (true) {
    double dens = (near_dist(x) < 0.5 ? opt.near_density : opt.far_density) * scale;
    x += 1.0 / dens;
    if (x >= r) break;
    xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  while (!xs.empty() && xs.front() <= l) xs.erase(xs.begin());
  return xs;
}

}  // namespace

MinResult global_min(const AuxFunction& f, const MinOptions& opt) {
  RootedAux ra(f);
  return global_min(ra, opt);
}

MinResult global_min(const RootedAux& f, const MinOptions& opt) {
  const AuxFunction& F = f.function();
  bool any = false;
  for (const auto& t : F.terms) any = any || t.c > 0;
  if (F.terms.empty()) throw std::invalid_argument("global_min needs at least one term");
  (void)any;

  MinResult out;
  const double A = opt.domain_cap.value_or(default_domain_cap(F));
  const double eps = opt.eps;
  out.domain_cap = A;

  std::vector<double> breaks{eps, A};
  for (double c : f.crossings())
    if (c > eps && c < A) breaks.push_back(c);
  if (eps < 1.0 && 1.0 < A) breaks.push_back(1.0);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  auto is_crossing = [&](double x) { return std::binary_search(f.crossings().begin(), f.crossings().end(), x); };

  std::vector<Candidate> best_cands;
  double prev_m = kInf;
  for (int round = 0; round < opt.max_rounds; ++round) {
    const double scale = std::ldexp(1.0, round);
    std::vector<Candidate> cands;
    bool converged = true;
    for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
      const double l = breaks[p], r = breaks[p + 1];
      std::vector<double> xs;
      std::vector<double> vs;
      std::vector<char> endpoint;
      std::vector<char> upper;
      // left end
      if (!is_crossing(l)) {
        double v = f.value(l);
        bool up = false;
        if (l == 1.0) {
          v += 1.0;  // right limit of the weight
          up = true;
        }
        xs.push_back(l);
        vs.push_back(v);
        endpoint.push_back(1);
        upper.push_back(up);
      }
      for (double x : piece_grid(l, r, scale, opt, f.near_points())) {
        xs.push_back(x);
        vs.push_back(f.value(x));
        endpoint.push_back(0);
        upper.push_back(0);
      }
      if (!is_crossing(r)) {
        xs.push_back(r);
        vs.push_back(f.value(r));  // at r = 1 this is the lower branch
        endpoint.push_back(1);
        upper.push_back(0);
      }
      const std::size_t n = xs.size();
      for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(vs[i])) continue;
        bool left_ok = i == 0 || vs[i] <= vs[i - 1];
        bool right_ok = i + 1 == n || vs[i] <= vs[i + 1];
        if (!left_ok || !right_ok) continue;
        if (endpoint[i]) {
          cands.push_back({xs[i], vs[i], static_cast<bool>(upper[i])});
          continue;
        }
        double lo = i > 0 ? xs[i - 1] : l;
        double hi = i + 1 < n ? xs[i + 1] : r;
        double x = xs[i], v = vs[i];
        if (!refine(f, lo, hi, x, v)) converged = false;
        if (v > vs[i]) {
          x = xs[i];
          v = vs[i];
        }
        cands.push_back({x, v, false});
      }
    }
    double m = kInf;
    for (const auto& c : cands) m = std::min(m, c.value);
    best_cands = std::move(cands);
    out.converged = converged;
    out.grid_rounds = round + 1;
    if (std::fabs(m - prev_m) <= opt.stability) break;
    prev_m = m;
  }

  // Final values at 128 bits.
  std::sort(best_cands.begin(), best_cands.end(), [](const Candidate& a, const Candidate& b) { return a.x < b.x; });
  out.m = kInf;
  for (const auto& c : best_cands) {
    if (!out.minima.empty() && std::fabs(out.minima.back().x - c.x) < 1e-9 && !c.upper_one) {
      if (c.value >= out.minima.back().value) continue;
      out.minima.pop_back();
    }
    double v = eval(F, Real(c.x)).convert_to<double>();
    if (c.upper_one) v += 1.0;
    if (!std::isfinite(v)) continue;
    out.minima.push_back({c.x, v});
    if (v < out.m) {
      out.m = v;
      out.argmin = c.x;
    }
  }
  return out;
}

CertifiedBound certified_bound(const AuxFunction& f, const MinOptions& opt) {
  CertifiedBound out;
  out.min = global_min(f, opt);
  out.m = out.min.m;
  std::vector<IntPolynomial> ex;
  for (const auto& term : f.terms) {
    if (term.c <= 0 || term.q.degree() < 1) continue;
    for (const auto& [g, mult] : factor(term.q).factors) {
      auto rs = all_roots(g);
      bool inside = f.weight.is_sector() ? in_sector(rs, f.weight.theta()) : totally_positive(rs);
      if (!inside || !g.is_monic()) continue;
      if (measure(g, rs).abs_r.convert_to<double>() >= out.m) continue;
      if (std::find(ex.begin(), ex.end(), g) == ex.end()) ex.push_back(g);
    }
  }
  std::sort(ex.begin(), ex.end(), [](const auto& a, const auto& b) { return canonical_less(a, b); });
  out.exceptions = std::move(ex);
  return out;
}

bool bound_applies(const AuxFunction& f, const IntPolynomial& p) {
  for (const auto& term : f.terms) {
    if (term.c <= 0 || term.q.degree() < 1) continue;
    if (resultant(p, term.q) == 0) return false;
  }
  return true;
}

}  // namespace rmeasure
