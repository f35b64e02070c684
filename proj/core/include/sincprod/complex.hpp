#pragma once

#include "sincprod/real.hpp"

namespace sincprod {

// Just enough complex arithmetic for principal-branch powers and the
// Dobinski partial products.
struct Complex {
  Real re;
  Real im;

  Complex() = default;
  explicit Complex(Bits bits) : re(bits), im(bits) {}
  explicit Complex(Real real_part);
  Complex(Real real_part, Real imag_part);

  Bits precision() const;
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  Complex& operator*=(const Complex& rhs);
  friend Complex operator*(const Complex& a, const Complex& b);
  friend Complex operator*(const Complex& a, const Real& b);
  friend Complex operator+(const Complex& a, const Complex& b);
  friend Complex operator-(const Complex& a, const Complex& b);
};

Real abs(const Complex& z);
// Principal argument in (-pi, pi]; a negative real axis maps to +pi.
Real arg(const Complex& z);
// exp(i * theta)
Complex polar(const Real& modulus, const Real& theta);

}  // namespace sincprod
