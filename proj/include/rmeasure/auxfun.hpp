#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rmeasure/intpoly.hpp"
#include "rmeasure/real.hpp"

namespace rmeasure {

/// Weight x * 1_(1,inf)(x) on the positive half-line, or |z| * 1_(1,inf)(|z|)
/// on the ray z = x e^{i theta}.
class WeightKind {
 public:
  enum class Kind { PositiveReal, SectorRay };

  static WeightKind positive_real() { return WeightKind(Kind::PositiveReal, 0.0); }
  /// Requires 0 < theta < 90 (degrees).
  static WeightKind sector(double theta_degrees);
  /// theta = 0 is the positive half-line itself; otherwise as sector().
  static WeightKind ray(double theta_degrees);

  Kind kind() const { return kind_; }
  bool is_sector() const { return kind_ == Kind::SectorRay; }
  double theta() const { return theta_; }
  std::string describe() const;

  friend bool operator==(const WeightKind&, const WeightKind&) = default;

 private:
  WeightKind(Kind k, double t) : kind_(k), theta_(t) {}
  Kind kind_;
  double theta_;
};

struct AuxTerm {
  double c = 0;
  IntPolynomial q;
};

/// weight - sum c_j log|Q_j|. Coefficients must be nonnegative; zero
/// coefficients are allowed and contribute nothing.
struct AuxFunction {
  WeightKind weight = WeightKind::positive_real();
  std::vector<AuxTerm> terms;

  /// sum c_j deg Q_j
  double t() const;
  /// sum deg Q_j over terms with c_j > 0
  int r() const;
  /// Throws std::invalid_argument on a negative coefficient or a zero polynomial.
  void validate() const;
  std::vector<IntPolynomial> polynomials() const;
  std::vector<double> coefficients() const;
};

/// Value at x > 0 in working precision (at least 128 bits); +inf where some
/// Q_j with c_j > 0 vanishes.
Real eval(const AuxFunction& f, const Real& x);
double eval(const AuxFunction& f, double x);

/// Evaluation through precomputed roots: log|Q(z)| = log|lc| + sum log|z - rho|,
/// in hardware floating point, with first and second derivatives along the ray.
class RootedAux {
 public:
  explicit RootedAux(const AuxFunction& f);
  /// Same polynomials and weight with different coefficients.
  RootedAux with_coefficients(const std::vector<double>& c) const;

  double value(double x) const;
  /// Value, first and second derivative in x.
  void derivatives(double x, double& v, double& d1, double& d2) const;
  /// log|Q_j(x e^{i theta})| for each term.
  std::vector<double> logs(double x) const;
  double log_abs(std::size_t j, double x) const;
  double weight_value(double x) const { return x > 1.0 ? x : 0.0; }

  /// Abscissae where a root lies on the ray (f is +inf there), ascending.
  const std::vector<double>& crossings() const { return crossings_; }
  /// Abscissae of roots close to the ray (|Im| < 0.5 after rotation).
  const std::vector<double>& near_points() const { return near_; }
  const AuxFunction& function() const { return f_; }

 private:
  struct Term {
    double c;
    double log_lc;
    std::vector<double> a, b;  // rotated roots a + ib
  };
  AuxFunction f_;
  std::vector<Term> terms_;
  std::vector<double> crossings_;
  std::vector<double> near_;
};

struct LocalMin {
  double x;
  double value;
};

struct MinResult {
  double m = 0;
  double argmin = 0;
  std::vector<LocalMin> minima;  // sorted by x
  double domain_cap = 0;
  bool converged = true;
  int grid_rounds = 0;
};

struct MinOptions {
  double eps = 1e-12;
  std::optional<double> domain_cap;  // default max(50, 2t)
  double stability = 1e-8;
  int max_rounds = 6;
  double near_density = 2000;  // points per unit within 0.5 of a root
  double far_density = 200;
};

double default_domain_cap(const AuxFunction& f);

/// Global minimum over [eps, A], split into smooth pieces at ray crossings
/// and at x = 1. Grid scan, Brent refinement, Newton polish; the grid is
/// doubled until the minimum is stable.
MinResult global_min(const AuxFunction& f, const MinOptions& opt = {});
MinResult global_min(const RootedAux& f, const MinOptions& opt = {});

struct CertifiedBound {
  double m = 0;
  MinResult min;
  /// Monic irreducible factors of the Q_j (with c_j > 0) whose roots all lie
  /// in the domain and whose r falls below m. Non-monic factors are not
  /// algebraic integers and factors with r >= m already satisfy the bound.
  std::vector<IntPolynomial> exceptions;
};

CertifiedBound certified_bound(const AuxFunction& f, const MinOptions& opt = {});

/// True when Res(p, Q_j) != 0 for every term with c_j > 0, i.e. the bound
/// argument applies to the roots of p.
bool bound_applies(const AuxFunction& f, const IntPolynomial& p);

// File format: `weight: positive-real` or `weight: sector <deg>`, then
// `term: <decimal> ; <polynomial>` lines; `#` comments, blank lines ignored.

struct AuxFileError : std::runtime_error {
  AuxFileError(const std::string& what, int line);
  int line;
};

AuxFunction parse_aux(const std::string& text);
AuxFunction load_aux(const std::string& path);
std::string format_aux(const AuxFunction& f, const std::string& header_comment = "");
/// Shortest decimal that reads back to the same double.
std::string format_coefficient(double c);

}  // namespace rmeasure
