#pragma once

#include <string>

#include "sincprod/exact_argument.hpp"

namespace sincprod {

// Exact classification of an argument relative to the tan poles and zeros
// of the curious products and the Dobinski product. The sign of a is
// ignored (every identity involved is even in a).
struct ArgumentClass {
  enum class Kind {
    regular,
    odd_pi_multiple,   // |a| = (2n-1) pi, n >= 1
    even_pi_multiple,  // |a| = 2^m (2n-1) pi, m >= 1, n >= 1
    pole_dyadic,       // |a| = (2n+1) pi / 2^k, k >= 1, n >= 0
  };

  Kind kind = Kind::regular;
  long m = 0;
  long n = 0;
  long k = 0;

  bool is_pi_multiple() const { return kind == Kind::odd_pi_multiple || kind == Kind::even_pi_multiple; }
  std::string describe() const;
};

ArgumentClass classify(const ExactArgument& a);

}  // namespace sincprod
