#pragma once

#include <vector>

#include "rmeasure/intpoly.hpp"
#include "rmeasure/real.hpp"

namespace rmeasure {

struct Root {
  Complex z;
  Real radius;  // a posteriori inclusion radius
  bool is_real = false;
};

/// All complex roots of a polynomial, repeated by multiplicity and sorted by
/// (real part, imaginary part).
struct RootSet {
  std::vector<Root> roots;
  unsigned precision_bits = 0;

  std::size_t size() const { return roots.size(); }
  /// Positive real roots, ascending, as doubles (duplicates collapsed).
  std::vector<double> positive_real_roots() const;
  Real max_radius() const;
};

struct RootOptions {
  unsigned start_bits = kDefaultPrecisionBits;
  unsigned max_bits = 2048;
  double target_radius = 1e-20;
};

/// Aberth-Ehrlich simultaneous iteration started on the Cauchy-bound circle.
/// Each square-free part is solved separately; zero roots are split off
/// exactly. Precision doubles until every inclusion disk is below the target
/// radius and the disks are pairwise disjoint; throws std::runtime_error if
/// that fails at max_bits.
RootSet all_roots(const IntPolynomial& p, const RootOptions& opt = {});

struct MeasureReport {
  int degree = 0;
  Real trace;
  Real abs_trace;
  Real r_measure;
  Real abs_r;
  Real mahler;
  bool totally_positive = false;
  bool monic = true;
  bool has_zero_root = false;
  Real sector_half_angle;  // degrees, zero roots excluded
};

/// Roots closer than this to the unit circle count as on it.
inline constexpr double kUnitCircleTolerance = 1e-15;

MeasureReport measure(const IntPolynomial& p);
MeasureReport measure(const IntPolynomial& p, const RootSet& roots);

inline constexpr double kSectorAngleTolerance = 1e-9;

/// Every root has |arg| <= theta (+ tolerance), theta in degrees. A root at
/// the origin has no argument and makes the answer false.
bool in_sector(const IntPolynomial& p, double theta_degrees, double tol_degrees = kSectorAngleTolerance);
bool in_sector(const RootSet& roots, double theta_degrees, double tol_degrees = kSectorAngleTolerance);

/// Every root real and strictly positive.
bool totally_positive(const RootSet& roots);

}  // namespace rmeasure
