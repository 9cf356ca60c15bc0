#include "ramid/json_io.hpp"

#include "ramid/errors.hpp"

namespace ramid {

namespace {

std::string field_string(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  const Json& v = j.at(key);
  if (!v.is_string()) throw ParseError(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

Rational rational_field(const Json& j, const char* key) { return Rational::parse(field_string(j, key)); }

int parse_sign(const std::string& s) {
  if (s == "+") return 1;
  if (s == "-" || s == "−") return -1;
  throw ParseError("sign must be \"+\" or \"-\", got \"" + s + "\"");
}

}  // namespace

Json to_json(const IdentityTuple& id, std::optional<Classification> cls) {
  Json j{{"t", id.t.to_string()},
         {"A", id.A.to_string()},
         {"x", id.x.to_string()},
         {"y", id.y.to_string()},
         {"z", id.z.to_string()}};
  if (cls) j["class"] = std::string(to_string(*cls));
  return j;
}

Json to_json_classified(const IdentityTuple& id) {
  if (verify_tuple(id)) return to_json(id, classify(id));
  return to_json(id);
}

Json to_json(const VariationIdentity& v) {
  Json radicand = Json::array();
  for (const Surd& s : v.radicand_entries()) radicand.push_back(s.to_string());
  Json rhs = Json::array();
  for (const RhsFactor& f : v.rhs_entries()) {
    rhs.push_back(Json{{"value", f.value.to_string()}, {"sign", f.sign > 0 ? "+" : "-"}});
  }
  return Json{{"scale", v.scale().to_string()}, {"radicand", radicand}, {"rhs", rhs}};
}

Json to_json(const ConditionReport& c) {
  return Json{{"discriminant_nonnegative", c.discriminant_nonnegative},
              {"beta_nonzero", c.beta_nonzero},
              {"one_minus_gamma_plus_beta_nonzero", c.one_minus_gamma_plus_beta_nonzero},
              {"minus_one_not_root", c.minus_one_not_root},
              {"inputs_nontrivial", c.inputs_nontrivial},
              {"right_side_nonnegative", c.right_side_nonnegative}};
}

Json to_json(const ConstructionResult& r) {
  Json roots;
  if (const auto* q = std::get_if<RationalRoots>(&r.roots)) {
    roots = Json{{"kind", "rational"}, {"x", q->first.to_string()}, {"y", q->second.to_string()}};
  } else if (const auto* s = std::get_if<SurdRoots>(&r.roots)) {
    roots = Json{{"kind", "surd"}, {"x", s->first.to_string()}, {"y", s->second.to_string()}};
  } else {
    roots = Json{{"kind", "none"}};
  }
  Json j{{"t", r.t.to_string()},
         {"A", r.A.to_string()},
         {"z", r.z.to_string()},
         {"k", r.k.to_string()},
         {"gamma", r.gamma.to_string()},
         {"beta", r.beta.to_string()},
         {"discriminant", r.discriminant.to_string()},
         {"roots", roots},
         {"conditions", to_json(r.conditions)}};
  if (auto id = r.tuple()) j["identity"] = to_json_classified(*id);
  return j;
}

Json summary_json(const EnumerationReport& report, std::string_view cls, bool primes_only) {
  return Json{{"class", std::string(cls)},
              {"primes_only", primes_only},
              {"count", report.identities.size()},
              {"candidates_examined", report.candidates_examined},
              {"wall_time_ms", std::chrono::duration<double, std::milli>(report.wall_time).count()}};
}

IdentityTuple tuple_from_json(const Json& j) {
  return {rational_field(j, "t"), rational_field(j, "A"), rational_field(j, "x"), rational_field(j, "y"),
          rational_field(j, "z")};
}

VariationIdentity variation_from_json(const Json& j) {
  const Rational scale = j.contains("scale") ? rational_field(j, "scale") : Rational(1);
  if (!j.contains("radicand") || !j.at("radicand").is_array()) throw ParseError("\"radicand\" must be an array");
  if (!j.contains("rhs") || !j.at("rhs").is_array()) throw ParseError("\"rhs\" must be an array");
  std::vector<Surd> radicand;
  for (const Json& e : j.at("radicand")) {
    if (!e.is_string()) throw ParseError("radicand entries must be strings");
    radicand.push_back(Surd::parse(e.get<std::string>()));
  }
  std::vector<RhsFactor> rhs;
  for (const Json& e : j.at("rhs")) {
    rhs.push_back({Surd::parse(field_string(e, "value")), parse_sign(field_string(e, "sign"))});
  }
  return VariationIdentity(scale, std::move(radicand), std::move(rhs));
}

AnyIdentity identity_from_json(const Json& j) {
  if (j.is_object() && j.contains("radicand")) return variation_from_json(j);
  return tuple_from_json(j);
}

}  // namespace ramid
