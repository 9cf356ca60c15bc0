#include "ramid/surd.hpp"

#include "ramid/errors.hpp"

namespace ramid {

Surd::Surd(Rational p, Rational q, const Integer& d) : p_(std::move(p)) {
  if (d < 0) throw DomainError("negative radicand " + d.get_str());
  if (q.is_zero() || d == 0) {
    return;
  }
  const auto [squarefree, root] = squarefree_split(d);
  if (squarefree == 1) {
    p_ += q * Rational(root);
    return;
  }
  q_ = q * Rational(root);
  d_ = squarefree;
}

Surd Surd::sqrt_of(const Rational& r) {
  if (r.sign() < 0) throw DomainError("square root of negative rational " + r.to_string());
  // sqrt(n/m) = sqrt(n*m) / m
  const Integer m = r.denominator();
  return Surd(Rational(0), Rational(1, m), r.numerator() * m);
}

Surd Surd::parse(std::string_view text) {
  const auto plus = text.find(" + ");
  if (plus == std::string_view::npos) return Surd(Rational::parse(text));
  const std::string_view head = text.substr(0, plus);
  const std::string_view tail = text.substr(plus + 3);
  const auto star = tail.find("*sqrt(");
  if (star == std::string_view::npos || tail.back() != ')') {
    throw ParseError("malformed surd '" + std::string(text) + "'");
  }
  const std::string_view radicand = tail.substr(star + 6, tail.size() - star - 7);
  const Rational d = Rational::parse(radicand);
  if (!d.is_integer() || d.sign() <= 0) throw ParseError("radicand must be a positive integer in '" + std::string(text) + "'");
  Surd s(Rational::parse(head), Rational::parse(tail.substr(0, star)), d.numerator());
  // Only canonical text round-trips; reject forms that normalize to something else.
  if (s.to_string() != text) throw ParseError("non-canonical surd '" + std::string(text) + "'");
  return s;
}

const Rational& Surd::as_rational() const {
  if (!is_rational()) throw DomainError("surd " + to_string() + " is irrational");
  return p_;
}

Surd Surd::conjugate() const {
  Surd s = *this;
  s.q_ = -q_;
  return s;
}

Rational Surd::norm() const { return p_ * p_ - q_ * q_ * Rational(d_); }

int Surd::sign() const {
  const int sp = p_.sign();
  const int sq = q_.sign();
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // Opposite signs: the larger of p^2 and q^2 d wins. Equality would make
  // d a rational square, which normalization rules out.
  const int c = (p_ * p_ <=> q_ * q_ * Rational(d_)) > 0 ? 1 : -1;
  return c > 0 ? sp : sq;
}

Surd Surd::reciprocal() const {
  if (is_zero()) throw DivisionByZero("reciprocal of zero surd");
  const Rational n = norm();
  Surd s;
  s.p_ = p_ / n;
  s.q_ = -q_ / n;
  s.d_ = d_;
  return s;
}

Surd Surd::operator-() const {
  Surd s = *this;
  s.p_ = -p_;
  s.q_ = -q_;
  return s;
}

Integer common_field(const Surd& a, const Surd& b) {
  if (a.d() == 0) return b.d();
  if (b.d() == 0 || a.d() == b.d()) return a.d();
  throw IncompatibleField("cannot combine Q(sqrt(" + a.d().get_str() + ")) with Q(sqrt(" + b.d().get_str() + "))");
}

Surd operator+(const Surd& a, const Surd& b) {
  const Integer d = common_field(a, b);
  return Surd(a.p_ + b.p_, a.q_ + b.q_, d);
}

Surd operator-(const Surd& a, const Surd& b) { return a + (-b); }

Surd operator*(const Surd& a, const Surd& b) {
  const Integer d = common_field(a, b);
  // (p + q r)(s + u r) = (ps + qud) + (pu + qs) r
  return Surd(a.p_ * b.p_ + a.q_ * b.q_ * Rational(d), a.p_ * b.q_ + a.q_ * b.p_, d);
}

Surd operator/(const Surd& a, const Surd& b) {
  common_field(a, b);
  return a * b.reciprocal();
}

std::strong_ordering operator<=>(const Surd& a, const Surd& b) {
  const int s = (a - b).sign();
  return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Surd::to_string() const {
  if (is_rational()) return p_.to_string();
  return p_.to_string() + " + " + q_.to_string() + "*sqrt(" + d_.get_str() + ")";
}

std::ostream& operator<<(std::ostream& os, const Surd& s) { return os << s.to_string(); }

Surd surd_mul(const Surd& x, const Surd& y) { return x * y; }

Surd surd_normalize(const Rational& p, const Rational& q, const Integer& d) { return Surd(p, q, d); }

}  // namespace ramid
