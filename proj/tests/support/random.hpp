#pragma once

#include <cstdint>
#include <random>

#include "ramid/surd.hpp"

namespace ramid::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long max_num = 50, long max_den = 20) {
    return Rational(Integer(integer(-max_num, max_num)), Integer(integer(1, max_den)));
  }

  Rational nonzero_rational(long max_num = 50, long max_den = 20) {
    for (;;) {
      Rational r = rational(max_num, max_den);
      if (!r.is_zero()) return r;
    }
  }

  /// Rational outside {0, 1, -1}.
  Rational nontrivial_rational(long max_num = 50, long max_den = 20) {
    for (;;) {
      Rational r = rational(max_num, max_den);
      if (!r.is_trivial()) return r;
    }
  }

  Surd surd(long d) { return Surd(rational(), rational(), Integer(d)); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace ramid::testing
