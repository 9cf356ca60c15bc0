#pragma once

// Independent floating evaluation used only as a cross-check of the exact
// verifier. 50 decimal digits, built from the decimal text of each value so
// no GMP arithmetic is involved.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ramid/identity.hpp"

namespace ramid::testing {

using Float = boost::multiprecision::cpp_bin_float_50;

inline Float to_float(const Rational& r) {
  return Float(r.numerator().get_str()) / Float(r.denominator().get_str());
}

inline Float to_float(const Surd& s) {
  return to_float(s.p()) + to_float(s.q()) * boost::multiprecision::sqrt(Float(s.d().get_str()));
}

struct FloatSides {
  Float radicand;
  Float right;
};

inline FloatSides float_sides(const IdentityTuple& id) {
  auto minus = [](const Rational& v) { return 1 - 1 / (to_float(v) * to_float(v)); };
  auto plus = [](const Rational& v) { return 1 + 1 / to_float(v); };
  return {to_float(id.t) * minus(id.A) * minus(id.x) * minus(id.y) * minus(id.z), plus(id.x) * plus(id.y) * plus(id.z)};
}

inline FloatSides float_sides(const VariationIdentity& v) {
  Float r = to_float(v.scale());
  for (const Surd& e : v.radicand_entries()) r *= 1 - 1 / (to_float(e) * to_float(e));
  Float s = 1;
  for (const RhsFactor& f : v.rhs_entries()) s *= 1 + f.sign / to_float(f.value);
  return {r, s};
}

/// The floating verdict: radicand >= 0 and sqrt(radicand) matches the right
/// side within `rel` relative tolerance.
template <typename Identity>
bool float_verdict(const Identity& id, double rel = 1e-10) {
  const FloatSides s = float_sides(id);
  if (s.radicand < 0) return false;
  const Float lhs = boost::multiprecision::sqrt(s.radicand);
  const Float right = boost::multiprecision::abs(s.right);
  const Float scale = right > Float(1e-30) ? right : Float(1e-30);
  return boost::multiprecision::abs(lhs - s.right) <= Float(rel) * scale;
}

}  // namespace ramid::testing
