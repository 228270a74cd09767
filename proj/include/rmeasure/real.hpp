#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

namespace rmeasure {

using BigInt = mpz_class;
using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultPrecisionBits = 128;

unsigned bits_to_digits10(unsigned bits);

/// RAII scope for the working precision of newly created Real values on
/// this thread. Restores the previous precision on destruction.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_digits10_;
};

unsigned current_precision_bits();

Real to_real(const BigInt& z);
/// Nearest integer, ties to even.
BigInt round_to_bigint(const Real& x);

/// Complex number over Real. Kept minimal: std::complex is unspecified for
/// non-builtin scalar types.
struct Complex {
  Real re{0};
  Real im{0};

  Complex() = default;
  Complex(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}

  static Complex polar(const Real& radius, const Real& angle);

  Complex conj() const { return {re, -im}; }
  Real norm() const { return re * re + im * im; }
  Real abs() const;
  Real arg() const;

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
};

Real pi();
Real degrees_to_radians(const Real& deg);
Real radians_to_degrees(const Real& rad);

}  // namespace rmeasure
