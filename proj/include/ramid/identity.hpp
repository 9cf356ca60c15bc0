#pragma once

/**
 * @file identity.hpp
 * @brief Square-root product identities and their exact verification.
 *
 * An IdentityTuple (t, A, x, y, z) stands for
 *
 *     sqrt(t (1 - 1/A^2)(1 - 1/x^2)(1 - 1/y^2)(1 - 1/z^2))
 *         = (1 + 1/x)(1 + 1/y)(1 + 1/z)
 *
 * A VariationIdentity generalizes it to any number of radicand factors
 * (1 - 1/v^2) and signed right-side factors (1 +- 1/w), with every entry in
 * one quadratic field Q(sqrt(d)).
 *
 * Verification never takes a square root: it checks that both sides are
 * nonnegative and that the radicand equals the square of the right side.
 */

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "ramid/rational.hpp"
#include "ramid/surd.hpp"

namespace ramid {

struct IdentityTuple {
  Rational t;
  Rational A;
  Rational x;
  Rational y;
  Rational z;

  friend bool operator==(const IdentityTuple&, const IdentityTuple&) = default;
  friend std::strong_ordering operator<=>(const IdentityTuple&, const IdentityTuple&) = default;

  /// "(t, A, x, y, z)".
  std::string to_string() const;
};

/// Throws TrivialInput naming the first offending variable when t = 0 or
/// any of A, x, y, z lies in {0, 1, -1}.
void check_nontrivial(const IdentityTuple& id);

Rational tuple_radicand(const IdentityTuple& id);
Rational tuple_right_side(const IdentityTuple& id);

/// Exact check of the identity. Throws TrivialInput on invariant violation.
bool verify_tuple(const IdentityTuple& id);

/// Same tuple with |A| and x <= y <= z; the verdict is invariant under both.
IdentityTuple canonical_tuple(const IdentityTuple& id);

enum class Classification {
  NontrivialRational,
  General,
  Perfect,
  SuperPerfect,
  Prime,
};

std::string_view to_string(Classification c);
/// Throws ParseError for unknown names.
Classification parse_classification(std::string_view name);

/// Most specific tag of a verified tuple. Throws PreconditionError if the
/// tuple does not verify.
Classification classify(const IdentityTuple& id);

/// One signed right-side factor (1 + sign/value).
struct RhsFactor {
  Surd value;
  int sign = 1;

  friend bool operator==(const RhsFactor&, const RhsFactor&) = default;
};

class VariationIdentity {
 public:
  /// Validates and canonicalizes: every entry nontrivial (TrivialInput),
  /// all entries in one field (IncompatibleField), radicand entries stored
  /// as |v|, right-side entries stored with positive value and the sign
  /// folded in, and both lists sorted ascending.
  VariationIdentity(Rational scale, std::vector<Surd> radicand, std::vector<RhsFactor> rhs);

  const Rational& scale() const { return scale_; }
  const std::vector<Surd>& radicand_entries() const { return radicand_; }
  const std::vector<RhsFactor>& rhs_entries() const { return rhs_; }
  /// Common radicand d of all entries, 0 when everything is rational.
  const Integer& field() const { return field_; }

  Surd radicand() const;
  Surd right_side() const;

  friend bool operator==(const VariationIdentity&, const VariationIdentity&) = default;

 private:
  Rational scale_;
  std::vector<Surd> radicand_;
  std::vector<RhsFactor> rhs_;
  Integer field_ = 0;
};

bool verify_variation(const VariationIdentity& v);

/// The tuple as a variation: scale t, radicand {A, x, y, z}, rhs {x, y, z}.
VariationIdentity as_variation(const IdentityTuple& id);

}  // namespace ramid
