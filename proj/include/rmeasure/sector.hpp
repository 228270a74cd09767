#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rmeasure/auxfun.hpp"
#include "rmeasure/tables.hpp"

namespace rmeasure {

/// Function i (1..9) of the sector table minimized on the ray at theta.
/// theta = 0 is the positive half-line.
double f_i(int i, double theta_degrees, const MinOptions& opt = {});

struct Envelope {
  double value = 0;
  int argmax = 0;  // which f_i attains it
  std::vector<double> values;  // f_1..f_9
};
Envelope f_envelope_detail(double theta_degrees, const MinOptions& opt = {});
double f_envelope(double theta_degrees, const MinOptions& opt = {});

struct PoolEntry {
  IntPolynomial p;
  double r = 0;
  double half_angle = 0;  // degrees
};

class StaircasePool {
 public:
  StaircasePool() = default;
  /// Measures p; throws std::invalid_argument for a zero root.
  void add(const IntPolynomial& p);
  const std::vector<PoolEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// P_1..P_9 of the sector table.
  static const StaircasePool& table1_pool();

 private:
  std::vector<PoolEntry> entries_;
};

/// Half-angles are compared against theta with this slack (degrees): the
/// table quotes jump abscissae rounded to 4 decimals.
inline constexpr double kStaircaseTolerance = 1e-3;

/// min r over pool entries with half_angle <= theta + tol; nullopt if none.
std::optional<double> g_theta(double theta_degrees, const StaircasePool& pool, double tol = kStaircaseTolerance);

struct SampleCheck {
  double theta = 0;
  double envelope = 0;
  int envelope_argmax = 0;
  std::optional<double> g;
  bool envelope_ok = false;
  bool g_ok = false;
};

struct IntervalReport {
  SectorRow row;
  double r = 0;
  double half_angle = 0;
  bool r_ok = false;
  bool angle_ok = false;
  std::vector<SampleCheck> samples;

  bool ok() const;
  std::string text() const;
};

inline constexpr double kRowRTolerance = 5e-5;
inline constexpr double kRowAngleTolerance = 1e-3;
inline constexpr double kEnvelopeTolerance = 1e-4;
/// Upper samples sit this far below theta_hi.
inline constexpr double kEndpointGuard = 1e-3;

/// Checks r(P_i), the half-angle of P_i against theta_lo, and f_envelope and
/// g at theta_lo, the midpoint and theta_hi - guard.
IntervalReport verify_interval(const SectorRow& row, const MinOptions& opt = {});

/// c(theta) where the sector table determines it exactly, nullopt elsewhere.
std::optional<double> c_of_theta(double theta_degrees);

}  // namespace rmeasure
