#include "rmeasure/sector.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "rmeasure/roots.hpp"

namespace rmeasure {

double f_i(int i, double theta, const MinOptions& opt) {
  AuxFunction f = sector_function(i);
  f.weight = WeightKind::ray(theta);
  return global_min(f, opt).m;
}

Envelope f_envelope_detail(double theta, const MinOptions& opt) {
  Envelope e;
  e.value = -std::numeric_limits<double>::infinity();
  for (int i = 1; i <= 9; ++i) {
    double v = f_i(i, theta, opt);
    e.values.push_back(v);
    if (v > e.value) {
      e.value = v;
      e.argmax = i;
    }
  }
  return e;
}

double f_envelope(double theta, const MinOptions& opt) { return f_envelope_detail(theta, opt).value; }

void StaircasePool::add(const IntPolynomial& p) {
  MeasureReport m = measure(p);
  if (m.has_zero_root) throw std::invalid_argument("pool polynomial has a zero root");
  entries_.push_back({p, m.abs_r.convert_to<double>(), m.sector_half_angle.convert_to<double>()});
}

const StaircasePool& StaircasePool::table1_pool() {
  static const StaircasePool pool = [] {
    StaircasePool p;
    for (const auto& row : table1()) p.add(row.p);
    return p;
  }();
  return pool;
}

std::optional<double> g_theta(double theta, const StaircasePool& pool, double tol) {
  if (pool.empty()) throw std::invalid_argument("empty staircase pool");
  std::optional<double> best;
  for (const auto& e : pool.entries())
    if (e.half_angle <= theta + tol && (!best || e.r < *best)) best = e.r;
  return best;
}

bool IntervalReport::ok() const {
  if (!r_ok || !angle_ok) return false;
  for (const auto& s : samples)
    if (!s.envelope_ok || !s.g_ok) return false;
  return true;
}

std::string IntervalReport::text() const {
  std::ostringstream os;
  os.precision(8);
  os << "row " << row.index << " [" << row.theta_lo << ", " << row.theta_hi << "] c = " << row.c_value << "  P = " << row.p
     << '\n';
  os << "  r(P) = " << r << (r_ok ? "  ok" : "  MISMATCH") << '\n';
  os << "  half-angle(P) = " << half_angle << " vs " << row.theta_lo << (angle_ok ? "  ok" : "  MISMATCH") << '\n';
  for (const auto& s : samples) {
    os << "  theta = " << s.theta << ": f = " << s.envelope << " (f_" << s.envelope_argmax << ")"
       << (s.envelope_ok ? " ok" : " BELOW") << ", g = ";
    if (s.g)
      os << *s.g;
    else
      os << "none";
    os << (s.g_ok ? " ok" : " MISMATCH") << '\n';
  }
  return os.str();
}

IntervalReport verify_interval(const SectorRow& row, const MinOptions& opt) {
  IntervalReport rep;
  rep.row = row;
  MeasureReport m = measure(row.p);
  rep.r = m.abs_r.convert_to<double>();
  rep.half_angle = m.sector_half_angle.convert_to<double>();
  rep.r_ok = std::fabs(rep.r - row.c_value) <= kRowRTolerance;
  rep.angle_ok = std::fabs(rep.half_angle - row.theta_lo) <= kRowAngleTolerance;
  const double thetas[3] = {row.theta_lo, 0.5 * (row.theta_lo + row.theta_hi), row.theta_hi - kEndpointGuard};
  const StaircasePool& pool = StaircasePool::table1_pool();
  for (double th : thetas) {
    SampleCheck s;
    s.theta = th;
    Envelope e = f_envelope_detail(th, opt);
    s.envelope = e.value;
    s.envelope_argmax = e.argmax;
    s.envelope_ok = e.value >= row.c_value - kEnvelopeTolerance;
    s.g = g_theta(th, pool);
    // pool r values are computed; the table quotes c to 4 decimals
    s.g_ok = s.g && std::fabs(*s.g - row.c_value) <= kRowRTolerance;
    rep.samples.push_back(s);
  }
  return rep;
}

std::optional<double> c_of_theta(double theta) {
  // scanned from the top so a shared endpoint belongs to the later row
  const auto& rows = table1();
  for (auto it = rows.rbegin(); it != rows.rend(); ++it)
    if (theta >= it->theta_lo && theta <= it->theta_hi) return it->c_value;
  return std::nullopt;
}

}  // namespace rmeasure
