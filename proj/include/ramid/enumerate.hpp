#pragma once

/**
 * @file enumerate.hpp
 * @brief Exhaustive search for perfect and super-perfect identities.
 *
 * For positive integers the identity is equivalent to
 *
 *     t = b(A) c(x) c(y) c(z),   b(A) = A^2/(A^2-1),   c(v) = (v+1)/(v-1),
 *
 * with every factor > 1 and strictly decreasing in its argument. z is
 * solved in closed form from (t, A, x, y), so only A, x and y are looped,
 * and every loop bound is an exact rational comparison.
 */

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "ramid/identity.hpp"
#include "ramid/rational.hpp"

namespace ramid {

/// z with t = b(A) c(x) c(y) c(z), if it is an integer >= 2.
std::optional<Integer> solve_z(const Rational& t, const Integer& A, const Integer& x, const Integer& y);

struct EnumerationReport {
  /// Sorted lexicographically on (t, A, x, y, z), no duplicates.
  std::vector<IdentityTuple> identities;
  /// Number of closed-form z evaluations performed.
  std::uint64_t candidates_examined = 0;
  std::chrono::nanoseconds wall_time{0};
};

struct EnumerationOptions {
  /// Inclusive t sweep; the defaults cover every possible value.
  std::int64_t t_min = 2;
  std::int64_t t_max = 0;  // 0 selects the class-specific maximum (6 or 36)
  unsigned threads = 0;
};

/// All t < A < x < y < z. t <= 6 always; the default sweep is 2..6.
EnumerationReport enumerate_super_perfect(const EnumerationOptions& options = {});

/// All positive-integer identities with t, A, x, y, z >= 2 and x <= y <= z
/// (A unrestricted relative to x). t <= 36 always.
EnumerationReport enumerate_perfect(const EnumerationOptions& options = {});

/// Keeps tuples whose A, x, y, z are all prime.
EnumerationReport prime_filter(const EnumerationReport& report);

}  // namespace ramid
