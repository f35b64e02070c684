#include "sincprod/classify.hpp"

#include "sincprod/errors.hpp"

namespace sincprod {
namespace {

long to_long_checked(const mpz_class& z) {
  if (!z.fits_slong_p()) throw DomainError("argument multiple too large to classify");
  return z.get_si();
}

}  // namespace

std::string ArgumentClass::describe() const {
  switch (kind) {
    case Kind::regular: return "regular";
    case Kind::odd_pi_multiple: return "odd_pi_multiple(n=" + std::to_string(n) + ")";
    case Kind::even_pi_multiple: return "even_pi_multiple(m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")";
    case Kind::pole_dyadic: return "pole_dyadic(k=" + std::to_string(k) + ")";
  }
  return "?";
}

ArgumentClass classify(const ExactArgument& a) {
  ArgumentClass out;
  if (!a.is_pure_pi_multiple()) return out;

  mpq_class s = abs(a.pi_multiple());
  mpz_class num = s.get_num();
  mpz_class den = s.get_den();

  if (den == 1) {
    const long twos = static_cast<long>(mpz_scan1(num.get_mpz_t(), 0));
    mpz_class odd;
    mpz_fdiv_q_2exp(odd.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(twos));
    const long n = to_long_checked((odd + 1) / 2);
    out.kind = twos == 0 ? ArgumentClass::Kind::odd_pi_multiple : ArgumentClass::Kind::even_pi_multiple;
    out.m = twos;
    out.n = n;
    return out;
  }

  // Lowest terms with a power-of-two denominator means an odd numerator.
  if (mpz_popcount(den.get_mpz_t()) == 1) {
    out.kind = ArgumentClass::Kind::pole_dyadic;
    out.k = static_cast<long>(mpz_scan1(den.get_mpz_t(), 0));
    out.n = to_long_checked((num - 1) / 2);
  }
  return out;
}

}  // namespace sincprod
