#include "sincprod/special.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>
#include <vector>

#include "sincprod/errors.hpp"

namespace sincprod {
namespace {

constexpr Bits kGuardBits = 32;

class BernoulliTable {
 public:
  mpq_class even(int k) {
    std::lock_guard<std::mutex> lock(mutex_);
    const size_t needed = 2 * static_cast<size_t>(k) + 1;
    if (all_.size() < needed) extend(std::max(needed, 2 * all_.size()));
    return all_[2 * static_cast<size_t>(k)];
  }

 private:
  // B_n = -1/(n+1) * sum_{i<n} C(n+1, i) B_i
  void extend(size_t count) {
    if (all_.empty()) all_.push_back(mpq_class(1));
    for (size_t n = all_.size(); n < count; ++n) {
      if (n > 1 && n % 2 == 1) {
        all_.push_back(mpq_class(0));
        continue;
      }
      mpq_class sum = 0;
      mpz_class binom = 1;  // C(n+1, i)
      for (size_t i = 0; i < n; ++i) {
        sum += mpq_class(binom) * all_[i];
        binom = binom * static_cast<unsigned long>(n + 1 - i) / static_cast<unsigned long>(i + 1);
      }
      mpq_class bn = -sum / mpq_class(static_cast<unsigned long>(n + 1));
      bn.canonicalize();
      all_.push_back(bn);
    }
  }

  std::mutex mutex_;
  std::vector<mpq_class> all_;
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

// Below this the asymptotic series cannot reach 2^-bits; see lngamma.
long asymptotic_threshold(Bits bits) { return std::max(10L, static_cast<long>(bits) / 4 + 1); }

Bits result_bits(const Real& x, const PrecisionContext& ctx) {
  return std::max(x.precision(), ctx.working_bits());
}

void require_positive(const Real& x, const char* fn) {
  if (!(x > 0L)) throw DomainError(std::string(fn) + " requires a positive argument");
}

}  // namespace

mpq_class bernoulli_even(int k) { return bernoulli_table().even(k); }

Real lngamma(const Real& x, Bits bits) {
  require_positive(x, "lngamma");
  if (x == 1L || x == 2L) return Real(bits);

  const Bits p = bits + kGuardBits;
  Real y = x.rounded(p);
  const long threshold = asymptotic_threshold(p);

  // ln Gamma(x) = ln Gamma(x + N) - ln(x (x+1) ... (x+N-1))
  Real shift_log(p);
  if (y < threshold) {
    Real product(1L, p);
    while (y < threshold) {
      product *= y;
      y += 1L;
    }
    shift_log = log(product);
  }

  // (y - 1/2) ln y - y + ln(2 pi)/2 + sum B_2k / (2k (2k-1) y^(2k-1))
  Real result = (y - Real::parse("0.5", p)) * log(y) - y + log(ldexp(pi(p), 1)) / 2L;
  const Real inv_y = 1L / y;
  const Real inv_y2 = inv_y * inv_y;
  Real power = inv_y;
  const Real eps = Real::power_of_two(-static_cast<long>(p), 64);
  for (int k = 1; k < 4 * static_cast<int>(p); ++k) {
    Real term = Real(bernoulli_even(k), p) * power / static_cast<long>(2 * k * (2 * k - 1));
    result += term;
    if (abs(term) < eps) break;
    power *= inv_y2;
  }
  return (result - shift_log).rounded(bits);
}

Real lngamma(const Real& x, const PrecisionContext& ctx) { return lngamma(x, result_bits(x, ctx)); }

Real digamma(const Real& x, Bits bits) {
  require_positive(x, "digamma");
  const Bits p = bits + kGuardBits;
  Real y = x.rounded(p);
  const long threshold = asymptotic_threshold(p);

  // psi(x) = psi(x + N) - sum_{i<N} 1/(x+i)
  Real shift(p);
  while (y < threshold) {
    shift += 1L / y;
    y += 1L;
  }

  // ln y - 1/(2y) - sum B_2k / (2k y^2k)
  Real result = log(y) - 1L / (y * 2L);
  const Real inv_y2 = 1L / (y * y);
  Real power = inv_y2;
  const Real eps = Real::power_of_two(-static_cast<long>(p), 64);
  for (int k = 1; k < 4 * static_cast<int>(p); ++k) {
    Real term = Real(bernoulli_even(k), p) * power / static_cast<long>(2 * k);
    result -= term;
    if (abs(term) < eps) break;
    power *= inv_y2;
  }
  return (result - shift).rounded(bits);
}

Real digamma(const Real& x, const PrecisionContext& ctx) { return digamma(x, result_bits(x, ctx)); }

Real eta_int(long n, Bits bits) {
  if (n < 2) throw DomainError("eta_int requires n >= 2, got " + std::to_string(n));
  const Bits p = bits + kGuardBits;
  // Error <= 2 (3 + sqrt 8)^-terms for totally monotone summands.
  const long terms = static_cast<long>(std::ceil((p + 4) * std::log(2.0) / std::log(3.0 + std::sqrt(8.0)))) + 1;

  Real d = pow(Real(3L, p) + sqrt(Real(8L, p)), terms);
  d = (d + 1L / d) / 2L;
  Real b(-1L, p);
  Real c = -d;
  Real sum(p);
  Real power(p);
  for (long k = 0; k < terms; ++k) {
    c = b - c;
    mpfr_ui_pow_ui(power.get(), static_cast<unsigned long>(k + 1), static_cast<unsigned long>(n), MPFR_RNDN);
    sum += c / power;
    // b *= (k + N)(k - N) / ((k + 1/2)(k + 1))
    b *= 2 * (k + terms) * (k - terms);
    b /= (2 * k + 1) * (k + 1);
  }
  return (sum / d).rounded(bits);
}

Real eta_int(long n, const PrecisionContext& ctx) { return eta_int(n, ctx.working_bits()); }

Real zeta_int(long n, Bits bits) {
  if (n < 2) throw DomainError("zeta_int requires n >= 2, got " + std::to_string(n));
  const Bits p = bits + kGuardBits;
  const Real factor = 1L - Real::power_of_two(1 - n, p);
  return (eta_int(n, p) / factor).rounded(bits);
}

Real zeta_int(long n, const PrecisionContext& ctx) { return zeta_int(n, ctx.working_bits()); }

Real euler_gamma(const PrecisionContext& ctx) { return euler_constant(ctx.working_bits()); }

Real pi_constant(const PrecisionContext& ctx) { return pi(ctx.working_bits()); }

Real ln2_constant(const PrecisionContext& ctx) { return log2_constant(ctx.working_bits()); }

Real ln3_constant(const PrecisionContext& ctx) { return log(Real(3L, ctx.working_bits())); }

}  // namespace sincprod
