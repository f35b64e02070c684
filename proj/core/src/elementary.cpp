#include "sincprod/elementary.hpp"

#include <algorithm>
#include <string>

#include "sincprod/errors.hpp"

namespace sincprod {
namespace {

constexpr Bits kPiGuardBits = 32;

// floor(q / 2) * 2 removed: q mod 2 in [0, 2).
mpq_class mod_two(const mpq_class& q) {
  mpz_class twice_den = 2 * q.get_den();
  mpz_class num = q.get_num();
  mpz_class rem;
  mpz_fdiv_r(rem.get_mpz_t(), num.get_mpz_t(), twice_den.get_mpz_t());
  mpq_class out(rem, q.get_den());
  out.canonicalize();
  return out;
}

long log2_magnitude(const mpq_class& q) {
  if (sgn(q) == 0) return 0;
  const long num_bits = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2));
  const long den_bits = static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
  return num_bits - den_bits + 1;
}

// x mod 2pi into [0, 2pi) at the precision of x.
Real wrap_two_pi(const Real& x, const Real& two_pi) {
  Real k = floor(x / two_pi);
  Real out = x - k * two_pi;
  if (out < 0L) out += two_pi;
  if (out >= two_pi) out -= two_pi;
  return out;
}

bool is_fraction(const std::optional<mpq_class>& f, long num, long den) {
  return f.has_value() && *f == mpq_class(num, den);
}

}  // namespace

std::string_view to_string(ElementaryFn fn) {
  switch (fn) {
    case ElementaryFn::sin: return "sin";
    case ElementaryFn::cos: return "cos";
    case ElementaryFn::tan: return "tan";
    case ElementaryFn::cot: return "cot";
    case ElementaryFn::sinh: return "sinh";
    case ElementaryFn::tanh: return "tanh";
    case ElementaryFn::exp: return "exp";
    case ElementaryFn::ln: return "ln";
  }
  return "?";
}

ElementaryFn parse_elementary_fn(std::string_view name) {
  for (ElementaryFn fn : {ElementaryFn::sin, ElementaryFn::cos, ElementaryFn::tan, ElementaryFn::cot,
                          ElementaryFn::sinh, ElementaryFn::tanh, ElementaryFn::exp, ElementaryFn::ln}) {
    if (to_string(fn) == name) return fn;
  }
  throw DomainError("unknown elementary function '" + std::string(name) + "'");
}

Real realize(const ExactArgument& arg, Bits bits) {
  Real out(arg.rational_part(), bits + kPiGuardBits);
  if (sgn(arg.pi_multiple()) != 0) {
    out += pi(bits + kPiGuardBits) * Real(arg.pi_multiple(), bits + kPiGuardBits);
  }
  return out.rounded(bits);
}

Real realize(const ExactArgument& arg, const PrecisionContext& ctx) {
  Real out(arg.rational_part(), ctx.working_bits());
  if (sgn(arg.pi_multiple()) != 0) {
    out += pi(ctx.working_bits()) * Real(arg.pi_multiple(), ctx.working_bits());
  }
  return out.rounded(ctx.bits());
}

Real elementary(ElementaryFn fn, const Real& x, const PrecisionContext& ctx) {
  const Bits bits = ctx.bits();
  Real out(bits);
  switch (fn) {
    case ElementaryFn::sin: mpfr_sin(out.get(), x.get(), MPFR_RNDN); break;
    case ElementaryFn::cos: mpfr_cos(out.get(), x.get(), MPFR_RNDN); break;
    case ElementaryFn::tan: mpfr_tan(out.get(), x.get(), MPFR_RNDN); break;
    case ElementaryFn::cot:
      if (x.is_zero()) throw DomainError("cot has a pole at 0");
      mpfr_cot(out.get(), x.get(), MPFR_RNDN);
      break;
    case ElementaryFn::sinh: mpfr_sinh(out.get(), x.get(), MPFR_RNDN); break;
    case ElementaryFn::tanh: mpfr_tanh(out.get(), x.get(), MPFR_RNDN); break;
    case ElementaryFn::exp: mpfr_exp(out.get(), x.get(), MPFR_RNDN); break;
    case ElementaryFn::ln:
      if (!(x > 0L)) throw DomainError("ln requires a positive argument");
      mpfr_log(out.get(), x.get(), MPFR_RNDN);
      break;
  }
  if (!out.is_finite()) throw DomainError(std::string(to_string(fn)) + " is not finite at this argument");
  return out;
}

Real elementary(ElementaryFn fn, const ExactArgument& x, const PrecisionContext& ctx) {
  switch (fn) {
    case ElementaryFn::sin:
    case ElementaryFn::cos:
    case ElementaryFn::tan:
    case ElementaryFn::cot: {
      ReducedAngle angle = reduce_angle(x, 1, ctx.working_bits());
      Real value = fn == ElementaryFn::sin   ? sin(angle)
                   : fn == ElementaryFn::cos ? cos(angle)
                   : fn == ElementaryFn::tan ? tan(angle)
                                             : cot(angle);
      return value.rounded(ctx.bits());
    }
    default:
      return elementary(fn, realize(x, ctx.working_bits()), ctx);
  }
}

ReducedAngle reduce_angle(const ExactArgument& a, const mpq_class& scale, Bits bits) {
  const mpq_class rational = a.rational_part() * scale;
  const mpq_class pi_part = mod_two(a.pi_multiple() * scale);
  const Bits internal = bits + std::max(0L, log2_magnitude(rational)) + kPiGuardBits;

  const Real two_pi = ldexp(pi(internal), 1);
  Real radians(internal);
  if (sgn(rational) != 0) radians = wrap_two_pi(Real(rational, internal), two_pi);
  if (sgn(pi_part) != 0) radians += pi(internal) * Real(pi_part, internal);
  radians = wrap_two_pi(radians, two_pi);

  ReducedAngle out{radians.rounded(bits), std::nullopt};
  if (sgn(rational) == 0) out.pi_fraction = pi_part;
  return out;
}

Real sin(const ReducedAngle& angle) {
  const Bits bits = angle.radians.precision();
  if (is_fraction(angle.pi_fraction, 0, 1) || is_fraction(angle.pi_fraction, 1, 1)) return Real(bits);
  if (is_fraction(angle.pi_fraction, 1, 2)) return Real(1L, bits);
  if (is_fraction(angle.pi_fraction, 3, 2)) return Real(-1L, bits);
  return sin(angle.radians);
}

Real cos(const ReducedAngle& angle) {
  const Bits bits = angle.radians.precision();
  if (is_fraction(angle.pi_fraction, 1, 2) || is_fraction(angle.pi_fraction, 3, 2)) return Real(bits);
  if (is_fraction(angle.pi_fraction, 0, 1)) return Real(1L, bits);
  if (is_fraction(angle.pi_fraction, 1, 1)) return Real(-1L, bits);
  return cos(angle.radians);
}

Real tan(const ReducedAngle& angle) {
  if (is_fraction(angle.pi_fraction, 1, 2) || is_fraction(angle.pi_fraction, 3, 2)) {
    throw DomainError("tan has a pole at an odd multiple of pi/2");
  }
  if (is_fraction(angle.pi_fraction, 0, 1) || is_fraction(angle.pi_fraction, 1, 1)) {
    return Real(angle.radians.precision());
  }
  return tan(angle.radians);
}

Real cot(const ReducedAngle& angle) {
  if (is_fraction(angle.pi_fraction, 0, 1) || is_fraction(angle.pi_fraction, 1, 1)) {
    throw DomainError("cot has a pole at a multiple of pi");
  }
  if (is_fraction(angle.pi_fraction, 1, 2) || is_fraction(angle.pi_fraction, 3, 2)) {
    return Real(angle.radians.precision());
  }
  if (angle.radians.is_zero()) throw DomainError("cot has a pole at 0");
  return cot(angle.radians);
}

namespace {

// sin/cos/tan/cot of pi * g for exact rational g; zeros are exact.
Real trig_pi_rational(ElementaryFn fn, mpq_class g, Bits bits) {
  // g into (-1, 1]
  g = mod_two(g);
  if (g > 1) g -= 2;
  int sign = 1;
  bool odd_fn = fn != ElementaryFn::cos;
  if (g < 0) {
    g = -g;
    if (odd_fn) sign = -sign;
  }
  // pi - x: sin even, cos/tan/cot odd
  if (g > mpq_class(1, 2)) {
    g = 1 - g;
    if (fn != ElementaryFn::sin) sign = -sign;
  }
  // Now g in [0, 1/2]. Above 1/4 switch to the cofunction of pi/2 - x.
  ElementaryFn use = fn;
  if (g > mpq_class(1, 4)) {
    g = mpq_class(1, 2) - g;
    switch (fn) {
      case ElementaryFn::sin: use = ElementaryFn::cos; break;
      case ElementaryFn::cos: use = ElementaryFn::sin; break;
      case ElementaryFn::tan: use = ElementaryFn::cot; break;
      default: use = ElementaryFn::tan; break;
    }
  }
  g.canonicalize();
  const Bits p = bits + 16;
  if (sgn(g) == 0) {
    switch (use) {
      case ElementaryFn::sin:
      case ElementaryFn::tan: return Real(bits);
      case ElementaryFn::cos: return Real(static_cast<long>(sign), bits);
      default: throw DomainError("tan/cot pole at an exact multiple of pi/2");
    }
  }
  const Real h = pi(p) * Real(g, p);
  Real v = use == ElementaryFn::sin   ? sin(h)
           : use == ElementaryFn::cos ? cos(h)
           : use == ElementaryFn::tan ? tan(h)
                                      : cot(h);
  if (sign < 0) v = -v;
  return v.rounded(bits);
}

}  // namespace

Real trig_scaled(ElementaryFn fn, const ExactArgument& a, const mpq_class& scale, Bits bits) {
  if (fn != ElementaryFn::sin && fn != ElementaryFn::cos && fn != ElementaryFn::tan && fn != ElementaryFn::cot) {
    throw DomainError("trig_scaled supports sin, cos, tan and cot only");
  }
  const ExactArgument x = a.scaled(scale);
  if (x.is_zero() || x.is_pure_pi_multiple()) return trig_pi_rational(fn, x.pi_multiple(), bits);
  const long magnitude = std::max(log2_magnitude(x.rational_part()), log2_magnitude(x.pi_multiple()) + 2);
  const Bits p = bits + std::max(0L, magnitude) + 16;
  const Real v = realize(x, p);
  Real out(p);
  switch (fn) {
    case ElementaryFn::sin: out = sin(v); break;
    case ElementaryFn::cos: out = cos(v); break;
    case ElementaryFn::tan: out = tan(v); break;
    default: out = cot(v); break;
  }
  if (!out.is_finite()) throw DomainError(std::string(to_string(fn)) + " is not finite at this argument");
  return out.rounded(bits);
}

Real reduce_scaled(const ExactArgument& a, unsigned long q, unsigned long j, const PrecisionContext& ctx) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), q, j);
  ReducedAngle angle = reduce_angle(a, mpq_class(scale), ctx.reduction_bits(q, j));
  return angle.radians.rounded(ctx.bits());
}

Complex pow_principal(const Complex& z, const Real& w) {
  const Bits bits = std::max(z.precision(), w.precision());
  if (z.is_zero()) {
    if (!(w > 0L)) throw DomainError("0 raised to a non-positive power");
    return Complex(Real(bits), Real(bits));
  }
  if (z.is_real() && z.re > 0L) {
    return Complex(exp(w.rounded(bits) * log(z.re.rounded(bits))), Real(bits));
  }
  const Real modulus = exp(w.rounded(bits) * log(abs(z).rounded(bits)));
  return polar(modulus, w.rounded(bits) * arg(z).rounded(bits));
}

Complex pow_principal(const Complex& z, const Real& w, const PrecisionContext& ctx) {
  Complex zw(z.re.rounded(std::max(z.re.precision(), ctx.working_bits())),
             z.im.rounded(std::max(z.im.precision(), ctx.working_bits())));
  Complex out = pow_principal(zw, w);
  return Complex(out.re.rounded(ctx.bits()), out.im.rounded(ctx.bits()));
}

}  // namespace sincprod
