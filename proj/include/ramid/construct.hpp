#pragma once

/**
 * @file construct.hpp
 * @brief Building (x, y) from (t, A, z, k) and recovering k from a tuple.
 *
 * For nonzero t, k and A, z outside {0, 1, -1}, put P = (A^2-1) t k and
 * Q = A^2 k. Then
 *
 *     gamma = P (z - 1) - Q (z + 1)
 *     beta  = P (z - 1) + Q (z + 1) - 1
 *
 * and x, y are the roots of X^2 - gamma X + beta = 0. These two relations
 * are equivalent to
 *
 *     xy + (x + y) + 1 = 2 k t (A^2 - 1)(z - 1)
 *     xy - (x + y) + 1 = 2 k A^2 (z + 1)
 *
 * which recover_k inverts.
 */

#include <optional>
#include <variant>

#include "ramid/identity.hpp"
#include "ramid/rational.hpp"
#include "ramid/surd.hpp"

namespace ramid {

struct GammaBeta {
  Rational gamma;
  Rational beta;
};

/// Throws TrivialInput when t = 0, k = 0, or A, z in {0, 1, -1}.
GammaBeta gamma_beta(const Rational& t, const Rational& A, const Rational& z, const Rational& k);

struct NoRoots {
  friend bool operator==(const NoRoots&, const NoRoots&) = default;
};
/// Larger root first; a zero discriminant yields the duplicated root.
struct RationalRoots {
  Rational first;
  Rational second;
  friend bool operator==(const RationalRoots&, const RationalRoots&) = default;
};
struct SurdRoots {
  Surd first;
  Surd second;
  friend bool operator==(const SurdRoots&, const SurdRoots&) = default;
};
using Roots = std::variant<NoRoots, RationalRoots, SurdRoots>;

/// Real roots of X^2 - gamma X + beta.
Roots solve_roots(const Rational& gamma, const Rational& beta);

struct ConditionReport {
  bool discriminant_nonnegative = false;
  bool beta_nonzero = false;
  bool one_minus_gamma_plus_beta_nonzero = false;
  /// 1 + gamma + beta != 0, i.e. -1 is not a root.
  bool minus_one_not_root = false;
  /// t, k, A, z and any real roots all avoid the trivial values.
  bool inputs_nontrivial = false;
  /// (1 + 1/x)(1 + 1/y)(1 + 1/z) >= 0. Without it the roots only satisfy the
  /// squared identity.
  bool right_side_nonnegative = false;

  bool all() const {
    return discriminant_nonnegative && beta_nonzero && one_minus_gamma_plus_beta_nonzero && minus_one_not_root &&
           inputs_nontrivial && right_side_nonnegative;
  }
};

struct ConstructionResult {
  Rational t;
  Rational A;
  Rational z;
  Rational k;
  Rational gamma;
  Rational beta;
  Rational discriminant;
  Roots roots;
  ConditionReport conditions;

  /// (t, A, first root, second root, z) when the roots are rational and all
  /// conditions hold.
  std::optional<IdentityTuple> tuple() const;
  /// The surd-pair identity over Q(sqrt(d)) when the roots are irrational
  /// and all conditions hold.
  std::optional<VariationIdentity> surd_identity() const;
};

ConstructionResult build_tuple(const Rational& t, const Rational& A, const Rational& z, const Rational& k);

/// k = (xy - (x + y) + 1) / (2 A^2 (z + 1)), returned only when the
/// companion relation xy + (x + y) + 1 = 2 k t (A^2 - 1)(z - 1) also holds.
/// Throws DegenerateDenominator for z = -1 and TrivialInput on invariant
/// violations.
std::optional<Rational> recover_k(const IdentityTuple& id);

}  // namespace ramid
