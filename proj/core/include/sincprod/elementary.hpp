#pragma once

#include <gmpxx.h>

#include <optional>
#include <string_view>

#include "sincprod/complex.hpp"
#include "sincprod/exact_argument.hpp"
#include "sincprod/precision.hpp"
#include "sincprod/real.hpp"

namespace sincprod {

enum class ElementaryFn { sin, cos, tan, cot, sinh, tanh, exp, ln };

std::string_view to_string(ElementaryFn fn);
// Throws DomainError for unknown names.
ElementaryFn parse_elementary_fn(std::string_view name);

// rational_part + pi_multiple * pi rounded to ctx.digits; pi is taken at
// digits + guard_digits.
Real realize(const ExactArgument& arg, const PrecisionContext& ctx);
// Same at an explicit precision (pi carries 32 extra bits).
Real realize(const ExactArgument& arg, Bits bits);

// fn(x) rounded to ctx.digits. Throws DomainError for ln(x <= 0) and for a
// non-finite tan/cot.
Real elementary(ElementaryFn fn, const Real& x, const PrecisionContext& ctx);
// As above, but tan/cot poles and trig zeros are recognised exactly.
Real elementary(ElementaryFn fn, const ExactArgument& x, const PrecisionContext& ctx);

// (q^j * a) mod 2pi in [0, 2pi), reduced at ctx.reduction_bits(q, j) and
// rounded to ctx.digits.
Real reduce_scaled(const ExactArgument& a, unsigned long q, unsigned long j, const PrecisionContext& ctx);

// exp(w * (ln|z| + i Arg z)) with Arg in (-pi, pi]. Positive real z takes the
// real route exp(w ln z) so the imaginary part is exactly zero. Throws
// DomainError for z = 0 with w <= 0. Result at the larger of the operand
// precisions.
Complex pow_principal(const Complex& z, const Real& w);
Complex pow_principal(const Complex& z, const Real& w, const PrecisionContext& ctx);

// An angle reduced into [0, 2pi). When the input is an exact rational
// multiple of pi, `pi_fraction` holds that multiple in [0, 2) and the trig
// helpers below return exact zeros/units and detect poles exactly.
struct ReducedAngle {
  Real radians;
  std::optional<mpq_class> pi_fraction;
};

// scale * a reduced mod 2pi, accurate to `bits` in absolute terms; the
// internal precision grows with log2|scale * rational_part|.
ReducedAngle reduce_angle(const ExactArgument& a, const mpq_class& scale, Bits bits);

Real sin(const ReducedAngle& angle);
Real cos(const ReducedAngle& angle);
// Throws DomainError at an exact pole.
Real tan(const ReducedAngle& angle);
Real cot(const ReducedAngle& angle);

// fn(scale * a) for fn in {sin, cos, tan, cot}, with relative accuracy about
// 2^-bits even when |scale * a| is huge or tiny. Pure pi multiples are
// reduced exactly, so zeros come out as exact zeros and poles throw
// DomainError.
Real trig_scaled(ElementaryFn fn, const ExactArgument& a, const mpq_class& scale, Bits bits);

}  // namespace sincprod
