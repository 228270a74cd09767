#include "rmeasure/real.hpp"

#include <cmath>

namespace rmeasure {

unsigned bits_to_digits10(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

namespace {
// Boost starts at 20 digits; make the library default the working precision.
const bool kDefaultPrecisionSet = (Real::default_precision(bits_to_digits10(kDefaultPrecisionBits)), true);
}  // namespace

PrecisionGuard::PrecisionGuard(unsigned bits) : saved_digits10_(Real::default_precision()) {
  Real::default_precision(bits_to_digits10(bits));
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_digits10_); }

unsigned current_precision_bits() {
  Real probe;
  return static_cast<unsigned>(mpfr_get_prec(probe.backend().data()));
}

Real to_real(const BigInt& z) {
  Real r;
  mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

BigInt round_to_bigint(const Real& x) {
  BigInt out;
  mpfr_get_z(out.get_mpz_t(), x.backend().data(), MPFR_RNDN);
  return out;
}

Complex Complex::polar(const Real& radius, const Real& angle) {
  return {radius * cos(angle), radius * sin(angle)};
}

Real Complex::abs() const { return hypot(re, im); }

Real Complex::arg() const { return atan2(im, re); }

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  // Smith's algorithm keeps intermediate magnitudes bounded.
  if (boost::multiprecision::abs(o.im) < boost::multiprecision::abs(o.re)) {
    Real ratio = o.im / o.re;
    Real den = o.re + o.im * ratio;
    Real r = (re + im * ratio) / den;
    im = (im - re * ratio) / den;
    re = std::move(r);
  } else {
    Real ratio = o.re / o.im;
    Real den = o.re * ratio + o.im;
    Real r = (re * ratio + im) / den;
    im = (im * ratio - re) / den;
    re = std::move(r);
  }
  return *this;
}

Real pi() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Real degrees_to_radians(const Real& deg) { return deg * pi() / 180; }

Real radians_to_degrees(const Real& rad) { return rad * 180 / pi(); }

}  // namespace rmeasure
