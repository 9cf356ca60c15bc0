#include "ramid/identity.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "ramid/errors.hpp"

namespace ramid {

std::string IdentityTuple::to_string() const {
  return "(" + t.to_string() + ", " + A.to_string() + ", " + x.to_string() + ", " + y.to_string() + ", " +
         z.to_string() + ")";
}

void check_nontrivial(const IdentityTuple& id) {
  if (id.t.is_zero()) throw TrivialInput("t", "trivial input: t = 0");
  const std::array<std::pair<const char*, const Rational*>, 4> vars{
      {{"A", &id.A}, {"x", &id.x}, {"y", &id.y}, {"z", &id.z}}};
  for (const auto& [name, value] : vars) {
    if (value->is_trivial()) {
      throw TrivialInput(name, std::string("trivial input: ") + name + " = " + value->to_string());
    }
  }
}

namespace {

Rational minus_inverse_square(const Rational& v) { return Rational(1) - v.square().reciprocal(); }

Rational plus_inverse(const Rational& v) { return Rational(1) + v.reciprocal(); }

void merge_field(Integer& field, const Surd& v) {
  if (v.d() == 0) return;
  if (field == 0) {
    field = v.d();
  } else if (field != v.d()) {
    throw IncompatibleField("entries mix Q(sqrt(" + field.get_str() + ")) and Q(sqrt(" + v.d().get_str() + "))");
  }
}

}  // namespace

Rational tuple_radicand(const IdentityTuple& id) {
  return id.t * minus_inverse_square(id.A) * minus_inverse_square(id.x) * minus_inverse_square(id.y) *
         minus_inverse_square(id.z);
}

Rational tuple_right_side(const IdentityTuple& id) {
  return plus_inverse(id.x) * plus_inverse(id.y) * plus_inverse(id.z);
}

bool verify_tuple(const IdentityTuple& id) {
  check_nontrivial(id);
  const Rational r = tuple_radicand(id);
  const Rational s = tuple_right_side(id);
  return r.sign() >= 0 && s.sign() >= 0 && r == s.square();
}

IdentityTuple canonical_tuple(const IdentityTuple& id) {
  std::array<Rational, 3> xyz{id.x, id.y, id.z};
  std::sort(xyz.begin(), xyz.end());
  return {id.t, id.A.abs(), xyz[0], xyz[1], xyz[2]};
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::NontrivialRational:
      return "nontrivial-rational";
    case Classification::General:
      return "general";
    case Classification::Perfect:
      return "perfect";
    case Classification::SuperPerfect:
      return "super-perfect";
    case Classification::Prime:
      return "prime";
  }
  return "unknown";
}

Classification parse_classification(std::string_view name) {
  for (auto c : {Classification::NontrivialRational, Classification::General, Classification::Perfect,
                 Classification::SuperPerfect, Classification::Prime}) {
    if (to_string(c) == name) return c;
  }
  throw ParseError("unknown classification '" + std::string(name) + "'");
}

Classification classify(const IdentityTuple& id) {
  if (!verify_tuple(id)) throw PreconditionError("classify: tuple " + id.to_string() + " does not verify");
  const std::array<const Rational*, 5> all{&id.t, &id.A, &id.x, &id.y, &id.z};
  if (!std::all_of(all.begin(), all.end(), [](const Rational* v) { return v->is_integer(); })) {
    return Classification::NontrivialRational;
  }
  // Nontrivial integers are already outside {0, 1, -1}; perfect needs all >= 2.
  if (!std::all_of(all.begin(), all.end(), [](const Rational* v) { return v->sign() > 0; })) {
    return Classification::General;
  }
  std::array<Rational, 3> xyz{id.x, id.y, id.z};
  std::sort(xyz.begin(), xyz.end());
  if (!(id.t < id.A && id.A < xyz[0] && xyz[0] < xyz[1] && xyz[1] < xyz[2])) return Classification::Perfect;
  const bool primes = is_prime(id.A.numerator()) && is_prime(xyz[0].numerator()) &&
                      is_prime(xyz[1].numerator()) && is_prime(xyz[2].numerator());
  return primes ? Classification::Prime : Classification::SuperPerfect;
}

VariationIdentity::VariationIdentity(Rational scale, std::vector<Surd> radicand, std::vector<RhsFactor> rhs)
    : scale_(std::move(scale)) {
  if (scale_.is_zero()) throw TrivialInput("scale", "trivial input: scale = 0");
  for (std::size_t i = 0; i < radicand.size(); ++i) {
    const Surd& v = radicand[i];
    if (v.is_trivial()) {
      throw TrivialInput("radicand[" + std::to_string(i) + "]", "trivial radicand entry " + v.to_string());
    }
    merge_field(field_, v);
    radicand_.push_back(v.abs());
  }
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    const RhsFactor& f = rhs[i];
    if (f.sign != 1 && f.sign != -1) throw PreconditionError("rhs sign must be +1 or -1");
    if (f.value.is_trivial()) {
      throw TrivialInput("rhs[" + std::to_string(i) + "]", "trivial right-side entry " + f.value.to_string());
    }
    merge_field(field_, f.value);
    const int s = f.value.sign();
    rhs_.push_back({f.value.abs(), f.sign * s});
  }
  std::sort(radicand_.begin(), radicand_.end());
  std::sort(rhs_.begin(), rhs_.end(), [](const RhsFactor& a, const RhsFactor& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.sign < b.sign;
  });
}

Surd VariationIdentity::radicand() const {
  Surd product(scale_);
  for (const Surd& v : radicand_) product *= Surd(1) - v.square().reciprocal();
  return product;
}

Surd VariationIdentity::right_side() const {
  Surd product(1);
  for (const RhsFactor& f : rhs_) product *= Surd(1) + Surd(f.sign) * f.value.reciprocal();
  return product;
}

bool verify_variation(const VariationIdentity& v) {
  const Surd r = v.radicand();
  const Surd s = v.right_side();
  return r.sign() >= 0 && s.sign() >= 0 && r == s.square();
}

VariationIdentity as_variation(const IdentityTuple& id) {
  check_nontrivial(id);
  return VariationIdentity(id.t, {Surd(id.A), Surd(id.x), Surd(id.y), Surd(id.z)},
                           {{Surd(id.x), 1}, {Surd(id.y), 1}, {Surd(id.z), 1}});
}

}  // namespace ramid
