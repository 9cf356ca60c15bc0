#include "ramid/construct.hpp"

#include "ramid/errors.hpp"

namespace ramid {

GammaBeta gamma_beta(const Rational& t, const Rational& A, const Rational& z, const Rational& k) {
  if (t.is_zero()) throw TrivialInput("t", "trivial input: t = 0");
  if (k.is_zero()) throw TrivialInput("k", "trivial input: k = 0");
  if (A.is_trivial()) throw TrivialInput("A", "trivial input: A = " + A.to_string());
  if (z.is_trivial()) throw TrivialInput("z", "trivial input: z = " + z.to_string());
  const Rational a2 = A.square();
  const Rational p = (a2 - 1) * t * k;
  const Rational q = a2 * k;
  return {p * (z - 1) - q * (z + 1), p * (z - 1) + q * (z + 1) - 1};
}

Roots solve_roots(const Rational& gamma, const Rational& beta) {
  const Rational disc = gamma.square() - Rational(4) * beta;
  if (disc.sign() < 0) return NoRoots{};
  const Rational half(1, 2);
  if (auto root = rational_sqrt(disc)) {
    return RationalRoots{(gamma + *root) * half, (gamma - *root) * half};
  }
  const Surd sq = Surd::sqrt_of(disc);
  return SurdRoots{(Surd(gamma) + sq) * Surd(half), (Surd(gamma) - sq) * Surd(half)};
}

namespace {

bool roots_nontrivial(const Roots& roots) {
  if (const auto* r = std::get_if<RationalRoots>(&roots)) return !r->first.is_trivial() && !r->second.is_trivial();
  // Irrational roots are never 0 or +-1.
  return std::holds_alternative<SurdRoots>(roots);
}

}  // namespace

ConstructionResult build_tuple(const Rational& t, const Rational& A, const Rational& z, const Rational& k) {
  const auto [gamma, beta] = gamma_beta(t, A, z, k);
  ConstructionResult out{t, A, z, k, gamma, beta, gamma.square() - Rational(4) * beta, solve_roots(gamma, beta), {}};
  ConditionReport& c = out.conditions;
  c.discriminant_nonnegative = out.discriminant.sign() >= 0;
  c.beta_nonzero = !beta.is_zero();
  c.one_minus_gamma_plus_beta_nonzero = !(Rational(1) - gamma + beta).is_zero();
  c.minus_one_not_root = !(Rational(1) + gamma + beta).is_zero();
  c.inputs_nontrivial = c.discriminant_nonnegative && roots_nontrivial(out.roots);
  if (c.beta_nonzero) {
    // (1 + 1/x)(1 + 1/y) = (1 + gamma + beta) / beta, rational even for surd roots.
    const Rational rhs = (Rational(1) + gamma + beta) / beta * (Rational(1) + z.reciprocal());
    c.right_side_nonnegative = rhs.sign() >= 0;
  }
  return out;
}

std::optional<IdentityTuple> ConstructionResult::tuple() const {
  const auto* r = std::get_if<RationalRoots>(&roots);
  if (r == nullptr || !conditions.all()) return std::nullopt;
  return IdentityTuple{t, A, r->first, r->second, z};
}

std::optional<VariationIdentity> ConstructionResult::surd_identity() const {
  const auto* r = std::get_if<SurdRoots>(&roots);
  if (r == nullptr || !conditions.all()) return std::nullopt;
  return VariationIdentity(t, {Surd(A), r->first, r->second, Surd(z)}, {{r->first, 1}, {r->second, 1}, {Surd(z), 1}});
}

std::optional<Rational> recover_k(const IdentityTuple& id) {
  if (id.z == Rational(-1)) throw DegenerateDenominator("recover_k: z = -1");
  check_nontrivial(id);
  const Rational xy = id.x * id.y;
  const Rational sum = id.x + id.y;
  const Rational a2 = id.A.square();
  const Rational k = (xy - sum + 1) / (Rational(2) * a2 * (id.z + 1));
  if (xy + sum + 1 != Rational(2) * k * id.t * (a2 - 1) * (id.z - 1)) return std::nullopt;
  return k;
}

}  // namespace ramid
