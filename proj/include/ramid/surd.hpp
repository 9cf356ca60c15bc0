#pragma once

/**
 * @file surd.hpp
 * @brief Elements p + q*sqrt(d) of a real quadratic field Q(sqrt(d)).
 *
 * Normalization is eager: d is always squarefree, q = 0 forces d = 0, and
 * d = 1 folds into the rational part. Two surds are equal iff their
 * (p, q, d) triples are equal. A pure rational has d = 0 and combines with
 * any field; two irrational surds over different d do not combine.
 */

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "ramid/rational.hpp"

namespace ramid {

class Surd {
 public:
  Surd() = default;
  Surd(Rational p) : p_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
  Surd(int p) : p_(p) {}                  // NOLINT(google-explicit-constructor)
  /// p + q*sqrt(d), normalized. Throws DomainError for negative d.
  Surd(Rational p, Rational q, const Integer& d);

  /// sqrt(r) as an element of Q(sqrt(squarefree part of r)). Throws for r < 0.
  static Surd sqrt_of(const Rational& r);

  /// Parses "p", or "p + q*sqrt(d)" with p, q in rational text form.
  static Surd parse(std::string_view text);

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  const Integer& d() const { return d_; }

  bool is_rational() const { return q_.is_zero(); }
  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }
  /// Rational value; throws DomainError if irrational.
  const Rational& as_rational() const;

  Surd conjugate() const;
  /// p^2 - q^2 d, the product with the conjugate.
  Rational norm() const;
  /// Exact sign of the real value: -1, 0 or +1.
  int sign() const;
  Surd abs() const { return sign() < 0 ? -*this : *this; }
  /// Throws DivisionByZero on zero.
  Surd reciprocal() const;
  Surd square() const { return *this * *this; }
  bool is_trivial() const { return is_rational() && p_.is_trivial(); }

  Surd operator-() const;
  friend Surd operator+(const Surd& a, const Surd& b);
  friend Surd operator-(const Surd& a, const Surd& b);
  friend Surd operator*(const Surd& a, const Surd& b);
  friend Surd operator/(const Surd& a, const Surd& b);
  Surd& operator+=(const Surd& o) { return *this = *this + o; }
  Surd& operator-=(const Surd& o) { return *this = *this - o; }
  Surd& operator*=(const Surd& o) { return *this = *this * o; }
  Surd& operator/=(const Surd& o) { return *this = *this / o; }

  friend bool operator==(const Surd& a, const Surd& b) {
    return a.d_ == b.d_ && a.p_ == b.p_ && a.q_ == b.q_;
  }
  /// Real-value ordering; throws IncompatibleField across different fields.
  friend std::strong_ordering operator<=>(const Surd& a, const Surd& b);

  std::string to_string() const;

 private:
  Rational p_;
  Rational q_;
  Integer d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Surd& s);

/// The common radicand of a and b: 0 if both rational, the nonzero one
/// otherwise. Throws IncompatibleField when both are irrational over
/// different d.
Integer common_field(const Surd& a, const Surd& b);

Surd surd_mul(const Surd& x, const Surd& y);
Surd surd_normalize(const Rational& p, const Rational& q, const Integer& d);

}  // namespace ramid
