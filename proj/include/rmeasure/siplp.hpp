#pragma once

#include <string>
#include <vector>

#include "rmeasure/auxfun.hpp"

namespace rmeasure {

/// Sorted, distinct control points in (0, A].
class ControlSet {
 public:
  static constexpr double kMergeTol = 1e-12;

  ControlSet() = default;
  explicit ControlSet(std::vector<double> pts);

  /// 500 uniform points on (0, A] and 50 geometric points in (0, 0.1].
  /// A nonzero seed jitters the uniform points within their cells.
  static ControlSet default_seed(double A = 50.0, unsigned long seed = 0);

  /// Inserts x unless it is within kMergeTol of an existing point; returns
  /// whether it was inserted. Non-positive x is rejected.
  bool add(double x);
  std::size_t merge(const std::vector<double>& xs);
  std::size_t merge(const ControlSet& o) { return merge(o.points_); }

  const std::vector<double>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

 private:
  std::vector<double> points_;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
  std::vector<double> coeffs;
  double m_inner = 0;
  LPStatus status = LPStatus::Optimal;
  /// Constraints within 1e-8 of m_inner.
  int active = 0;
  /// Points used (finite constraints only).
  std::size_t rows = 0;
};

/// max m  s.t.  weight(x_i) - sum_j c_j log|Q_j(x_i)| >= m,  c_j >= 0.
/// Solved through its dual by the simplex method; the c_j are the dual
/// prices. Points where some Q_j vanishes impose no constraint and are skipped.
LPResult solve_lp(const ControlSet& points, const std::vector<IntPolynomial>& polys, const WeightKind& weight);
LPResult solve_lp(const ControlSet& points, const RootedAux& aux);

struct SIPIteration {
  int iter = 0;
  double m_lower = 0;
  double m_upper = 0;
  std::size_t points = 0;
};

struct SIPTrace {
  std::vector<SIPIteration> iterations;
  bool converged = false;
  bool stalled = false;
  bool capped = false;

  /// `iter  m_lower  m_upper  points` lines with a header row.
  std::string tsv() const;
};

struct SIPOptions {
  double gap_tol = 1e-6;
  int max_iter = 200;
  double c0 = 1e-3;
  /// Starting coefficients; empty means c0 for every polynomial.
  std::vector<double> c_init;
  int stall_window = 5;
  double stall_tol = 1e-12;
  MinOptions min;
};

struct SIPResult {
  LPResult lp;               // last LP solve
  SIPTrace trace;
  double m = 0;              // certified value: final m_lower
  AuxFunction best;          // coefficients attaining m
  ControlSet points;         // final control set
  std::vector<LocalMin> minima;  // local minima of best
};

SIPResult semi_infinite_optimize(const std::vector<IntPolynomial>& polys, const WeightKind& weight,
                                 const ControlSet& seed_points = {}, const SIPOptions& opt = {});

}  // namespace rmeasure
