#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rmeasure/real.hpp"

namespace rmeasure {

/// Dense univariate polynomial over the integers. Coefficients are stored in
/// ascending degree order and the leading coefficient is never zero; the zero
/// polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  /// Ascending coefficients, e.g. from_coeffs({-1, 6, -5, 1}) is x^3 - 5x^2 + 6x - 1.
  static IntPolynomial from_coeffs(std::initializer_list<long> ascending);
  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, std::size_t power);
  static IntPolynomial x() { return monomial(1, 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^k; zero past the degree.
  const BigInt& coeff(std::size_t k) const;
  const BigInt& leading() const;

  /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
  BigInt content() const;
  /// Divides out the content and makes the leading coefficient positive.
  IntPolynomial primitive_part() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }
  IntPolynomial derivative() const;
  /// x^deg p(1/x).
  IntPolynomial reciprocal() const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  IntPolynomial& operator*=(const BigInt& s);
  /// Exact division of every coefficient; the caller guarantees divisibility.
  IntPolynomial& divide_exact(const BigInt& s);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
  friend IntPolynomial operator-(IntPolynomial a);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Total order used for canonical sorting: degree first, then coefficients
  /// from the top down.
  friend bool canonical_less(const IntPolynomial& a, const IntPolynomial& b);

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t pos);
  std::size_t position;
};

IntPolynomial parse_polynomial(std::string_view text);
std::string to_string(const IntPolynomial& p);
std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

Real eval_real(const IntPolynomial& p, const Real& x);
Complex eval_complex(const IntPolynomial& p, const Complex& z);
/// Horner in hardware floating point; intended for scanning only.
double eval_double(const IntPolynomial& p, double x);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) a = q b + r.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);
/// a / b when b divides a exactly over Z, otherwise nullopt.
std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b);
/// Primitive gcd with positive leading coefficient (gcd(0, 0) = 0).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);
/// Resultant by the subresultant PRS. Throws std::invalid_argument on a zero
/// argument.
BigInt resultant(const IntPolynomial& a, const IntPolynomial& b);
BigInt discriminant(const IntPolynomial& p);

/// Square-free decomposition of the primitive part: pairs (s_i, i) with
/// p = content * prod s_i^i, each s_i primitive and square-free. Factors
/// equal to 1 are omitted.
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p);

struct Factorization {
  BigInt unit;  // sign times content
  std::vector<std::pair<IntPolynomial, int>> factors;

  IntPolynomial expand() const;
};

/// Complete factorization into irreducibles over Z (Zassenhaus: factor
/// modulo a prime, Hensel lift, recombine). Factors are primitive with
/// positive leading coefficient and are returned in canonical order.
Factorization factor(const IntPolynomial& p);
bool is_irreducible(const IntPolynomial& p);

}  // namespace rmeasure
