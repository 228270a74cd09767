#include "rmeasure/siplp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "rmeasure/simplex.hpp"

namespace rmeasure {

ControlSet::ControlSet(std::vector<double> pts) {
  std::sort(pts.begin(), pts.end());
  for (double x : pts) add(x);
}

ControlSet ControlSet::default_seed(double A, unsigned long seed) {
  std::vector<double> pts;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.5, 0.5);
  for (int i = 1; i <= 500; ++i) {
    double x = A * i / 500.0;
    if (seed != 0) x += A / 500.0 * jitter(rng);
    pts.push_back(std::min(x, A));
  }
  for (int k = 0; k < 50; ++k) pts.push_back(0.1 * std::pow(10.0, -5.0 * k / 49.0));
  return ControlSet(std::move(pts));
}

bool ControlSet::add(double x) {
  if (!(x > 0) || !std::isfinite(x)) return false;
  auto it = std::lower_bound(points_.begin(), points_.end(), x);
  if (it != points_.end() && *it - x <= kMergeTol) return false;
  if (it != points_.begin() && x - *(it - 1) <= kMergeTol) return false;
  points_.insert(it, x);
  return true;
}

std::size_t ControlSet::merge(const std::vector<double>& xs) {
  std::size_t n = 0;
  for (double x : xs) n += add(x) ? 1 : 0;
  return n;
}

LPResult solve_lp(const ControlSet& points, const std::vector<IntPolynomial>& polys, const WeightKind& weight) {
  AuxFunction f;
  f.weight = weight;
  for (const auto& q : polys) f.terms.push_back({0.0, q});
  return solve_lp(points, RootedAux(f));
}

LPResult solve_lp(const ControlSet& points, const RootedAux& aux) {
  const std::size_t J = aux.function().terms.size();
  if (J == 0) throw std::invalid_argument("solve_lp needs at least one polynomial");
  std::vector<std::vector<double>> L;
  std::vector<double> w;
  for (double x : points.points()) {
    auto l = aux.logs(x);
    bool finite = std::all_of(l.begin(), l.end(), [](double v) { return std::isfinite(v); });
    if (!finite) continue;
    L.push_back(std::move(l));
    w.push_back(aux.weight_value(x));
  }
  LPResult res;
  res.rows = L.size();
  res.coeffs.assign(J, 0.0);
  if (L.empty()) {
    res.status = LPStatus::Unbounded;
    return res;
  }

  // Dual: min w.lambda  s.t. sum lambda = 1,  -L^T lambda + s = 0,  lambda, s >= 0.
  const int N = static_cast<int>(L.size());
  StandardLP lp;
  lp.rows = static_cast<int>(J) + 1;
  lp.cols = N + static_cast<int>(J);
  lp.A.assign(static_cast<std::size_t>(lp.rows) * static_cast<std::size_t>(lp.cols), 0.0);
  lp.b.assign(static_cast<std::size_t>(lp.rows), 0.0);
  lp.c.assign(static_cast<std::size_t>(lp.cols), 0.0);
  lp.b[0] = 1.0;
  for (int i = 0; i < N; ++i) {
    lp.at(0, i) = 1.0;
    lp.c[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < J; ++j) lp.at(static_cast<int>(j) + 1, i) = -L[static_cast<std::size_t>(i)][j];
  }
  for (std::size_t j = 0; j < J; ++j) lp.at(static_cast<int>(j) + 1, N + static_cast<int>(j)) = 1.0;

  SimplexResult s = simplex_solve(lp);
  if (s.status == SimplexStatus::Infeasible) {
    res.status = LPStatus::Unbounded;
    return res;
  }
  if (s.status != SimplexStatus::Optimal) {
    res.status = LPStatus::Infeasible;
    return res;
  }
  for (std::size_t j = 0; j < J; ++j) res.coeffs[j] = std::max(0.0, -s.y[j + 1]);

  double m = std::numeric_limits<double>::infinity();
  std::vector<double> vals(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) {
    double v = w[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < J; ++j) v -= res.coeffs[j] * L[static_cast<std::size_t>(i)][j];
    vals[static_cast<std::size_t>(i)] = v;
    m = std::min(m, v);
  }
  res.m_inner = m;
  for (double v : vals)
    if (v - m <= 1e-8) ++res.active;
  res.status = LPStatus::Optimal;
  return res;
}

std::string SIPTrace::tsv() const {
  std::ostringstream os;
  os.precision(12);
  os << "iter\tm_lower\tm_upper\tpoints\n";
  for (const auto& it : iterations) os << it.iter << '\t' << it.m_lower << '\t' << it.m_upper << '\t' << it.points << '\n';
  return os.str();
}

SIPResult semi_infinite_optimize(const std::vector<IntPolynomial>& polys, const WeightKind& weight,
                                 const ControlSet& seed_points, const SIPOptions& opt) {
  if (polys.empty()) throw std::invalid_argument("semi_infinite_optimize needs at least one polynomial");
  AuxFunction f0;
  f0.weight = weight;
  for (const auto& q : polys) f0.terms.push_back({0.0, q});
  const RootedAux base(f0);

  SIPResult out;
  out.points = seed_points.empty() ? ControlSet::default_seed() : seed_points;
  std::vector<double> C(polys.size(), opt.c0);
  if (!opt.c_init.empty()) {
    if (opt.c_init.size() != polys.size()) throw std::invalid_argument("c_init size does not match polynomial count");
    C = opt.c_init;
  }
  std::vector<double> bestC = C;
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
  std::vector<double> gaps;

  for (int iter = 0; iter < opt.max_iter; ++iter) {
    RootedAux cur = base.with_coefficients(C);
    MinResult gm = global_min(cur, opt.min);
    double m_here = gm.m;
    for (double x : out.points.points()) m_here = std::min(m_here, cur.value(x));
    if (m_here > lower) {
      lower = m_here;
      bestC = C;
      out.minima = gm.minima;
    }
    for (const auto& lm : gm.minima) out.points.add(lm.x);

    out.lp = solve_lp(out.points, cur);
    if (out.lp.status != LPStatus::Optimal) break;
    upper = std::min(upper, out.lp.m_inner);
    out.trace.iterations.push_back({iter, lower, upper, out.points.size()});

    double gap = upper - lower;
    gaps.push_back(gap);
    if (gap <= opt.gap_tol) {
      out.trace.converged = true;
      break;
    }
    if (static_cast<int>(gaps.size()) > opt.stall_window &&
        gaps[gaps.size() - 1 - static_cast<std::size_t>(opt.stall_window)] - gap < opt.stall_tol) {
      out.trace.stalled = true;
      break;
    }
    if (iter + 1 == opt.max_iter) out.trace.capped = true;
    C = out.lp.coeffs;
  }

  out.m = lower;
  out.best = f0;
  for (std::size_t j = 0; j < bestC.size(); ++j) out.best.terms[j].c = bestC[j];
  return out;
}

}  // namespace rmeasure
