#pragma once

/**
 * @file families.hpp
 * @brief Closed-form parametric families of identities and a seeded random
 * search for new instances.
 *
 * Every generator checks its parameter domain and verifies its output
 * exactly before returning it; a parameter that yields a false instance is
 * reported as FamilyDomainError rather than returned.
 */

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ramid/identity.hpp"
#include "ramid/rational.hpp"

namespace ramid {

/// (a+1)/(a-1), a, 2a+1, 3a+2, 6a+1.
IdentityTuple rebak_family(const Rational& a);
/// (a+1)/(a-1), a, 2a+1, 3a+1, 6a+5.
IdentityTuple rebak_variant_family(const Rational& a);
/// (2, k, 5, 1 - 2k^2, 7): infinitely many integral identities.
IdentityTuple general_infinite_family(const Integer& k);

/// Arbitrarily long identity with a = 2 - b^2: radicand entries 2b+1, 2b-1,
/// 2a+2n-1 and a-1+i for i = 0..n; right side (1 - 1/(2b+1)),
/// (1 + 1/(2b-1)), (1 + 1/(2a+2n-1)).
VariationIdentity long_identity(const Integer& b, const Integer& n);

/// Identity over Q(sqrt(a-1)) for a >= 3.
VariationIdentity surd_family_high(const Rational& a);
/// Identity over Q(sqrt(2-a)) for a <= 1 (a not in {0, 1, -1/2, -1}).
VariationIdentity surd_family_low(const Rational& a);

using FamilyParams = std::map<std::string, Rational, std::less<>>;
using AnyIdentity = std::variant<IdentityTuple, VariationIdentity>;

/// Family names accepted by make_family, in display order.
const std::vector<std::string_view>& family_names();

/// Dispatches by name: rebak / rebak-variant / surd-high / surd-low take
/// "a", general-infinite takes "k", long-identity takes "b" and "n".
/// Throws ConfigError for unknown names or missing/extra parameters.
AnyIdentity make_family(std::string_view name, const FamilyParams& params);

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool empty() const { return hi < lo; }
};

struct DiscoverOptions {
  std::uint64_t seed = 1;
  std::uint64_t trials = 100000;
  Rational t = 2;
  IntRange A{2, 12};
  IntRange z{-30, 30};
  IntRange k_numerator{-12, 12};
  IntRange k_denominator{1, 12};
  unsigned threads = 0;
};

/// Seeded random search over (A, z, k) for a fixed t. Keeps every sample
/// whose construction has rational roots and passes all conditions, in
/// canonical form (|A|, x <= y <= z), sorted and deduplicated.
/// Throws ConfigError for trials == 0 or empty ranges.
std::vector<IdentityTuple> discover(const DiscoverOptions& options);

}  // namespace ramid
