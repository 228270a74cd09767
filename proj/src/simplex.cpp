#include "rmeasure/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rmeasure {

namespace {

class Tableau {
 public:
  Tableau(const StandardLP& lp, double tol) : m_(lp.rows), n_(lp.cols), tol_(tol) {
    // locate unit columns
    init_basis_.assign(static_cast<std::size_t>(m_), -1);
    for (int k = 0; k < n_; ++k) {
      int row = -1;
      bool unit = true;
      for (int r = 0; r < m_ && unit; ++r) {
        double v = lp.A[idx(r, k, n_)];
        if (v == 0.0) continue;
        if (v == 1.0 && row < 0) {
          row = r;
        } else {
          unit = false;
        }
      }
      if (unit && row >= 0 && init_basis_[static_cast<std::size_t>(row)] < 0) init_basis_[static_cast<std::size_t>(row)] = k;
    }
    n_art_ = 0;
    for (int r = 0; r < m_; ++r)
      if (init_basis_[static_cast<std::size_t>(r)] < 0) init_basis_[static_cast<std::size_t>(r)] = n_ + n_art_++;
    w_ = n_ + n_art_;
    T_.assign(static_cast<std::size_t>(m_) * static_cast<std::size_t>(w_), 0.0);
    beta_ = lp.b;
    for (int r = 0; r < m_; ++r) {
      if (beta_[static_cast<std::size_t>(r)] < 0) throw std::invalid_argument("simplex: negative right-hand side");
      for (int k = 0; k < n_; ++k) T_[idx(r, k, w_)] = lp.A[idx(r, k, n_)];
      int ib = init_basis_[static_cast<std::size_t>(r)];
      if (ib >= n_) T_[idx(r, ib, w_)] = 1.0;
    }
    basis_ = init_basis_;
    cost_.assign(static_cast<std::size_t>(w_), 0.0);
    for (int k = 0; k < n_; ++k) cost_[static_cast<std::size_t>(k)] = lp.c[static_cast<std::size_t>(k)];
  }

  // Returns status of the phase; phase 1 minimizes the sum of artificials.
  SimplexStatus run(bool phase1, int& pivots, int max_pivots) {
    std::vector<double> c(static_cast<std::size_t>(w_), 0.0);
    if (phase1) {
      for (int k = n_; k < w_; ++k) c[static_cast<std::size_t>(k)] = 1.0;
    } else {
      c = cost_;
    }
    compute_reduced(c);
    while (true) {
      int enter = -1;
      int limit = phase1 ? w_ : n_;
      for (int k = 0; k < limit; ++k) {
        if (d_[static_cast<std::size_t>(k)] < -tol_) {
          enter = k;
          break;
        }
      }
      if (enter < 0) return SimplexStatus::Optimal;
      int leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int r = 0; r < m_; ++r) {
        double a = T_[idx(r, enter, w_)];
        if (a <= tol_) continue;
        double ratio = beta_[static_cast<std::size_t>(r)] / a;
        if (ratio < best - 1e-15 ||
            (std::fabs(ratio - best) <= 1e-15 && basis_[static_cast<std::size_t>(r)] < basis_[static_cast<std::size_t>(leave)])) {
          best = ratio;
          leave = r;
        }
      }
      if (leave < 0) return SimplexStatus::Unbounded;
      pivot(leave, enter);
      if (++pivots >= max_pivots) return SimplexStatus::IterationLimit;
    }
  }

  double objective(const std::vector<double>& c) const {
    double z = 0;
    for (int r = 0; r < m_; ++r) z += c[static_cast<std::size_t>(basis_[static_cast<std::size_t>(r)])] * beta_[static_cast<std::size_t>(r)];
    return z;
  }

  double artificial_sum() const {
    double s = 0;
    for (int r = 0; r < m_; ++r)
      if (basis_[static_cast<std::size_t>(r)] >= n_) s += beta_[static_cast<std::size_t>(r)];
    return s;
  }

  void drive_out_artificials() {
    for (int r = 0; r < m_; ++r) {
      if (basis_[static_cast<std::size_t>(r)] < n_) continue;
      int best = -1;
      double mag = tol_;
      for (int k = 0; k < n_; ++k) {
        double a = std::fabs(T_[idx(r, k, w_)]);
        if (a > mag) {
          mag = a;
          best = k;
        }
      }
      if (best >= 0) pivot(r, best);
    }
  }

  void fill(SimplexResult& res) const {
    res.x.assign(static_cast<std::size_t>(n_), 0.0);
    for (int r = 0; r < m_; ++r) {
      int b = basis_[static_cast<std::size_t>(r)];
      if (b < n_) res.x[static_cast<std::size_t>(b)] = beta_[static_cast<std::size_t>(r)];
    }
    res.y.assign(static_cast<std::size_t>(m_), 0.0);
    for (int r = 0; r < m_; ++r) {
      int k = init_basis_[static_cast<std::size_t>(r)];
      res.y[static_cast<std::size_t>(r)] = cost_[static_cast<std::size_t>(k)] - d_[static_cast<std::size_t>(k)];
    }
    res.objective = objective(cost_);
  }

 private:
  static std::size_t idx(int r, int k, int width) {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(width) + static_cast<std::size_t>(k);
  }

  void compute_reduced(const std::vector<double>& c) {
    d_ = c;
    for (int r = 0; r < m_; ++r) {
      double cb = c[static_cast<std::size_t>(basis_[static_cast<std::size_t>(r)])];
      if (cb == 0.0) continue;
      for (int k = 0; k < w_; ++k) d_[static_cast<std::size_t>(k)] -= cb * T_[idx(r, k, w_)];
    }
  }

  void pivot(int r, int k) {
    double p = T_[idx(r, k, w_)];
    double* row = &T_[idx(r, 0, w_)];
    for (int j = 0; j < w_; ++j) row[j] /= p;
    beta_[static_cast<std::size_t>(r)] /= p;
    row[k] = 1.0;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      double* other = &T_[idx(i, 0, w_)];
      double f = other[k];
      if (f == 0.0) continue;
      for (int j = 0; j < w_; ++j) other[j] -= f * row[j];
      other[k] = 0.0;
      beta_[static_cast<std::size_t>(i)] -= f * beta_[static_cast<std::size_t>(r)];
      if (beta_[static_cast<std::size_t>(i)] < 0 && beta_[static_cast<std::size_t>(i)] > -1e-12) beta_[static_cast<std::size_t>(i)] = 0;
    }
    double f = d_[static_cast<std::size_t>(k)];
    if (f != 0.0) {
      for (int j = 0; j < w_; ++j) d_[static_cast<std::size_t>(j)] -= f * row[j];
      d_[static_cast<std::size_t>(k)] = 0.0;
    }
    basis_[static_cast<std::size_t>(r)] = k;
  }

  int m_, n_, n_art_ = 0, w_ = 0;
  double tol_;
  std::vector<double> T_, beta_, d_, cost_;
  std::vector<int> basis_, init_basis_;
};

}  // namespace

SimplexResult simplex_solve(const StandardLP& lp, double tol, int max_pivots) {
  if (lp.A.size() != static_cast<std::size_t>(lp.rows) * static_cast<std::size_t>(lp.cols) ||
      lp.b.size() != static_cast<std::size_t>(lp.rows) || lp.c.size() != static_cast<std::size_t>(lp.cols))
    throw std::invalid_argument("simplex: inconsistent dimensions");
  Tableau t(lp, tol);
  SimplexResult res;
  SimplexStatus s = t.run(true, res.pivots, max_pivots);
  if (s == SimplexStatus::IterationLimit) {
    res.status = s;
    return res;
  }
  if (t.artificial_sum() > tol) {
    res.status = SimplexStatus::Infeasible;
    return res;
  }
  t.drive_out_artificials();
  s = t.run(false, res.pivots, max_pivots);
  res.status = s;
  t.fill(res);
  return res;
}

}  // namespace rmeasure
