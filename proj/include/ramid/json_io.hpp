#pragma once

/**
 * @file json_io.hpp
 * @brief JSON forms of identities, construction results and search reports.
 *
 * Every scalar is a string in rational ("p/q") or surd ("p + q*sqrt(d)")
 * text form, so numbers never pass through floating point.
 *
 *   tuple:      {"t":"2","A":"3","x":"7","y":"11","z":"19","class":"prime"}
 *   variation:  {"scale":"1","radicand":["9","11"],
 *                "rhs":[{"value":"9","sign":"+"},{"value":"11","sign":"-"}]}
 */

#include <optional>
#include <string>

#include <json.hpp>

#include "ramid/construct.hpp"
#include "ramid/enumerate.hpp"
#include "ramid/families.hpp"
#include "ramid/identity.hpp"

namespace ramid {

using Json = nlohmann::ordered_json;

/// "class" is included when given.
Json to_json(const IdentityTuple& id, std::optional<Classification> cls = std::nullopt);
/// Tuple with its classification when it verifies, without one otherwise.
Json to_json_classified(const IdentityTuple& id);
Json to_json(const VariationIdentity& v);
Json to_json(const ConstructionResult& r);
Json to_json(const ConditionReport& c);
/// Summary line for a search: class, count, candidates, wall time.
Json summary_json(const EnumerationReport& report, std::string_view cls, bool primes_only);

/// Throws ParseError on missing fields or malformed numbers. "class" is ignored.
IdentityTuple tuple_from_json(const Json& j);
VariationIdentity variation_from_json(const Json& j);
/// Dispatches on the presence of "radicand".
AnyIdentity identity_from_json(const Json& j);

}  // namespace ramid
