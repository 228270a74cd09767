#pragma once

#include <vector>

namespace rmeasure {

/// min c.x  s.t.  A x = b, x >= 0, with b >= 0. Dense, row-major A.
struct StandardLP {
  int rows = 0;
  int cols = 0;
  std::vector<double> A;
  std::vector<double> b;
  std::vector<double> c;

  double& at(int r, int k) { return A[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(k)]; }
};

enum class SimplexStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct SimplexResult {
  SimplexStatus status = SimplexStatus::Optimal;
  std::vector<double> x;
  std::vector<double> y;  // row duals: c_k - y.A_k >= 0 at optimum
  double objective = 0;
  int pivots = 0;
};

/// Two-phase primal simplex with Bland's rule. Rows that already own a unit
/// column start with it in the basis; the others get an artificial.
SimplexResult simplex_solve(const StandardLP& lp, double tol = 1e-9, int max_pivots = 1000000);

}  // namespace rmeasure
