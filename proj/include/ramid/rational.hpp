#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision exact fractions.
 *
 * Rational wraps a GMP rational and keeps it canonical at all times:
 * the denominator is positive and coprime to the numerator, and zero is
 * 0/1. Equality is therefore structural. Values are immutable once built;
 * every operation returns a fresh value, so instances may be shared freely
 * between threads.
 *
 * Text form is "p/q", or "p" when q = 1. parse(to_string(r)) == r and
 * to_string(parse(s)) == s for every canonical string s.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ramid {

using Integer = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(int n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n) : Rational(Integer(std::to_string(n))) {}  // NOLINT
  Rational(const Integer& n) : value_(n) {}  // NOLINT(google-explicit-constructor)

  /// Throws DivisionByZero when den == 0.
  Rational(const Integer& num, const Integer& den);

  /// Strict grammar: -?[0-9]+(/[0-9]+)?  Throws ParseError on anything else.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  /// -1, 0 or +1.
  int sign() const { return sgn(value_); }
  /// True for 0, 1 and -1: the values no identity variable may take.
  bool is_trivial() const;

  Rational operator-() const;
  Rational abs() const;
  /// Throws DivisionByZero on zero.
  Rational reciprocal() const;
  Rational square() const { return *this * *this; }
  /// Integer power, negative exponents allowed for nonzero values.
  Rational pow(int exponent) const;
  /// Greatest integer <= value.
  Integer floor() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws DivisionByZero.
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const;
  /// Nearest double; only for diagnostics and floating cross-checks.
  double to_double() const { return value_.get_d(); }
  std::size_t hash() const;

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Exact nonnegative square root when both numerator and denominator are
/// perfect squares, empty otherwise. Throws DomainError for negative input.
std::optional<Rational> rational_sqrt(const Rational& q);

/// Squarefree part of a positive integer n: the unique squarefree s with
/// n = s * m^2. Returns {s, m}. Throws DomainError for n <= 0.
struct SquarefreeSplit {
  Integer squarefree;
  Integer root;
};
SquarefreeSplit squarefree_split(const Integer& n);

bool is_prime(const Integer& n);

}  // namespace ramid

template <>
struct std::hash<ramid::Rational> {
  std::size_t operator()(const ramid::Rational& r) const noexcept { return r.hash(); }
};
