#include "ramid/families.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <sstream>

#include "ramid/construct.hpp"
#include "ramid/errors.hpp"
#include "ramid/parallel.hpp"

namespace ramid {

namespace {

void reject_excluded(std::string_view family, const Rational& a, std::initializer_list<Rational> excluded) {
  for (const Rational& e : excluded) {
    if (a == e) {
      throw FamilyDomainError(std::string(family) + ": parameter a = " + a.to_string() + " is excluded");
    }
  }
}

IdentityTuple checked_tuple(std::string_view family, const std::string& param, const IdentityTuple& id) {
  try {
    if (verify_tuple(id)) return id;
  } catch (const TrivialInput& e) {
    throw FamilyDomainError(std::string(family) + ": " + param + " gives " + e.what());
  }
  throw FamilyDomainError(std::string(family) + ": " + param + " gives " + id.to_string() +
                          ", whose right side is negative");
}

VariationIdentity checked_variation(std::string_view family, const std::string& param, Rational scale,
                                    std::vector<Surd> radicand, std::vector<RhsFactor> rhs) {
  try {
    VariationIdentity v(std::move(scale), std::move(radicand), std::move(rhs));
    if (verify_variation(v)) return v;
  } catch (const TrivialInput& e) {
    throw FamilyDomainError(std::string(family) + ": " + param + " gives " + e.what());
  }
  throw FamilyDomainError(std::string(family) + ": " + param + " does not give a valid identity");
}

IdentityTuple rebak_like(std::string_view family, const Rational& a, const Rational& y_offset,
                         const Rational& z_offset) {
  const Rational t = (a + 1) / (a - 1);
  return checked_tuple(family, "a = " + a.to_string(),
                       {t, a, Rational(2) * a + 1, Rational(3) * a + y_offset, Rational(6) * a + z_offset});
}

}  // namespace

IdentityTuple rebak_family(const Rational& a) {
  reject_excluded("rebak", a, {Rational(-2, 3), Rational(-1, 2), Rational(-1, 3), Rational(-1, 6), 0, 1});
  return rebak_like("rebak", a, 2, 1);
}

IdentityTuple rebak_variant_family(const Rational& a) {
  reject_excluded("rebak-variant", a, {Rational(-5, 6), Rational(-2, 3), Rational(-1, 2), Rational(-1, 3), 0, 1});
  return rebak_like("rebak-variant", a, 1, 5);
}

IdentityTuple general_infinite_family(const Integer& k) {
  if (abs(k) <= 1) throw FamilyDomainError("general-infinite: k = " + k.get_str() + " must avoid 0, 1, -1");
  const Rational kr(k);
  return checked_tuple("general-infinite", "k = " + k.get_str(), {2, kr, 5, Rational(1) - Rational(2) * kr.square(), 7});
}

VariationIdentity long_identity(const Integer& b, const Integer& n) {
  if (b < 2) throw FamilyDomainError("long-identity: b = " + b.get_str() + " must be at least 2");
  if (n < 1) throw FamilyDomainError("long-identity: n = " + n.get_str() + " must be at least 1");
  const Integer a = 2 - b * b;
  std::vector<std::string> violated;
  for (Integer i = 1; i <= n; ++i) {
    if (a + i == 0) violated.push_back("a+" + i.get_str() + " = 0");
  }
  if (a + n == 1) violated.push_back("a+n = 1");
  if (a == 0 || a == 1 || a == 2) violated.push_back("a in {0, 1, 2}");
  if (!violated.empty()) {
    std::ostringstream msg;
    msg << "long-identity: b = " << b << ", n = " << n << " (a = " << a << ") violates";
    for (const auto& v : violated) msg << ' ' << v << ';';
    throw FamilyDomainError(msg.str());
  }
  const Rational ar(a);
  const Rational br(b);
  const Rational tail = Rational(2) * ar + Rational(2) * Rational(n) - 1;
  std::vector<Surd> radicand{Surd(Rational(2) * br + 1), Surd(Rational(2) * br - 1), Surd(tail)};
  for (Integer i = 0; i <= n; ++i) radicand.emplace_back(ar - 1 + Rational(i));
  std::vector<RhsFactor> rhs{{Surd(Rational(2) * br + 1), -1}, {Surd(Rational(2) * br - 1), 1}, {Surd(tail), 1}};
  return checked_variation("long-identity", "b = " + b.get_str() + ", n = " + n.get_str(), 1, std::move(radicand),
                           std::move(rhs));
}

VariationIdentity surd_family_high(const Rational& a) {
  if (a < Rational(3)) throw FamilyDomainError("surd-high: a = " + a.to_string() + " must be at least 3");
  const Surd root = Surd::sqrt_of(a - 1);
  const Surd plus = Surd(1) + Surd(2) * root;
  const Surd minus = Surd(2) * root - Surd(1);
  const Rational twice = Rational(2) * a + 1;
  return checked_variation("surd-high", "a = " + a.to_string(), 1, {Surd(a), Surd(a - 1), Surd(twice), plus, minus},
                           {{Surd(twice), 1}, {plus, 1}, {minus, -1}});
}

VariationIdentity surd_family_low(const Rational& a) {
  if (a > Rational(1)) throw FamilyDomainError("surd-low: a = " + a.to_string() + " must be at most 1");
  reject_excluded("surd-low", a, {0, 1, Rational(-1, 2), -1});
  const Surd root = Surd::sqrt_of(Rational(2) - a);
  const Surd plus = Surd(2) * root + Surd(1);
  const Surd minus = Surd(2) * root - Surd(1);
  const Rational twice = Rational(2) * a + 1;
  return checked_variation("surd-low", "a = " + a.to_string(), 1, {Surd(a), Surd(a - 1), Surd(twice), plus, minus},
                           {{plus, -1}, {minus, 1}, {Surd(twice), 1}});
}

const std::vector<std::string_view>& family_names() {
  static const std::vector<std::string_view> names{"rebak",         "rebak-variant", "general-infinite",
                                                   "long-identity", "surd-high",     "surd-low"};
  return names;
}

namespace {

const Rational& require(std::string_view family, const FamilyParams& params, std::string_view key) {
  const auto it = params.find(key);
  if (it == params.end()) throw ConfigError(std::string(family) + " needs parameter --" + std::string(key));
  return it->second;
}

Integer require_integer(std::string_view family, const FamilyParams& params, std::string_view key) {
  const Rational& v = require(family, params, key);
  if (!v.is_integer()) throw ConfigError(std::string(family) + ": --" + std::string(key) + " must be an integer");
  return v.numerator();
}

void only(std::string_view family, const FamilyParams& params, std::initializer_list<std::string_view> keys) {
  for (const auto& [key, value] : params) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ConfigError(std::string(family) + " does not take parameter --" + key);
    }
  }
}

}  // namespace

AnyIdentity make_family(std::string_view name, const FamilyParams& params) {
  if (name == "rebak" || name == "rebak-variant" || name == "surd-high" || name == "surd-low") {
    only(name, params, {"a"});
    const Rational& a = require(name, params, "a");
    if (name == "rebak") return rebak_family(a);
    if (name == "rebak-variant") return rebak_variant_family(a);
    if (name == "surd-high") return surd_family_high(a);
    return surd_family_low(a);
  }
  if (name == "general-infinite") {
    only(name, params, {"k"});
    return general_infinite_family(require_integer(name, params, "k"));
  }
  if (name == "long-identity") {
    only(name, params, {"b", "n"});
    return long_identity(require_integer(name, params, "b"), require_integer(name, params, "n"));
  }
  throw ConfigError("unknown family '" + std::string(name) + "'");
}

std::vector<IdentityTuple> discover(const DiscoverOptions& options) {
  if (options.trials == 0) throw ConfigError("discover: trials must be positive");
  if (options.A.empty() || options.z.empty() || options.k_numerator.empty() || options.k_denominator.empty()) {
    throw ConfigError("discover: empty parameter range");
  }
  if (options.k_denominator.lo <= 0) throw ConfigError("discover: k denominators must be positive");

  struct Sample {
    long A, z, num, den;
  };
  // Samples are drawn sequentially so the set depends only on the seed.
  std::mt19937_64 rng(options.seed);
  auto draw = [&rng](IntRange r) { return std::uniform_int_distribution<long>(r.lo, r.hi)(rng); };
  std::vector<Sample> samples(options.trials);
  for (auto& s : samples) {
    s.A = draw(options.A);
    s.z = draw(options.z);
    const bool unit = std::bernoulli_distribution(0.5)(rng);
    s.num = unit ? 1 : draw(options.k_numerator);
    s.den = draw(options.k_denominator);
  }

  constexpr std::size_t kChunk = 4096;
  const std::size_t chunks = (samples.size() + kChunk - 1) / kChunk;
  std::vector<std::vector<IdentityTuple>> found(chunks);
  parallel_for(chunks, resolve_threads(options.threads), [&](std::size_t c) {
    const std::size_t end = std::min(samples.size(), (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < end; ++i) {
      const Sample& s = samples[i];
      try {
        const auto result = build_tuple(options.t, Rational(s.A), Rational(s.z), Rational(Integer(s.num), Integer(s.den)));
        if (auto tuple = result.tuple(); tuple && verify_tuple(*tuple)) found[c].push_back(canonical_tuple(*tuple));
      } catch (const Error&) {
        // degenerate sample
      }
    }
  });

  std::vector<IdentityTuple> out;
  for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ramid
