#include "sincprod/complex.hpp"

#include <algorithm>
#include <utility>

namespace sincprod {

Complex::Complex(Real real_part) : re(std::move(real_part)), im(re.precision()) {}

Complex::Complex(Real real_part, Real imag_part) : re(std::move(real_part)), im(std::move(imag_part)) {
  // -0 would flip atan2 to -pi on the negative axis.
  if (im.is_zero()) im = Real(im.precision());
}

Bits Complex::precision() const { return std::max(re.precision(), im.precision()); }

Complex& Complex::operator*=(const Complex& rhs) { return *this = *this * rhs; }

Complex operator*(const Complex& a, const Complex& b) {
  return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

Complex operator*(const Complex& a, const Real& b) { return Complex(a.re * b, a.im * b); }

Complex operator+(const Complex& a, const Complex& b) { return Complex(a.re + b.re, a.im + b.im); }

Complex operator-(const Complex& a, const Complex& b) { return Complex(a.re - b.re, a.im - b.im); }

Real abs(const Complex& z) {
  Real out(z.precision());
  mpfr_hypot(out.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return out;
}

Real arg(const Complex& z) {
  Real im = z.im.is_zero() ? Real(z.precision()) : z.im.rounded(z.precision());
  return atan2(im, z.re.rounded(z.precision()));
}

Complex polar(const Real& modulus, const Real& theta) {
  Real s(theta.precision());
  Real c(theta.precision());
  mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
  return Complex(modulus * c, modulus * s);
}

}  // namespace sincprod
