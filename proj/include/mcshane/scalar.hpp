#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <variant>

namespace mcshane {

using Rational = mpq_class;
using Integer = mpz_class;

/// Raised when an input violates an operation's precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a checked mathematical invariant fails at runtime
/// (overlapping deadzones, a non-increasing Vieta step, ...).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

/// Parses "p/q", "p" (exact) and, when `allow_decimal`, decimal strings
/// such as "13.65" (binary64).
class Scalar;
Scalar parse_scalar(const std::string& text, bool allow_decimal);
Rational parse_rational(const std::string& text);
Integer parse_integer(const std::string& text);

/// Largest integer not exceeding q.
Integer floor(const Rational& q);

/// Converts with full exponent range; huge magnitudes become +-inf.
double to_double(const Rational& q);

/// Exact rational or binary64 value. Arithmetic between two exact operands
/// stays exact; any binary64 operand makes the result binary64.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(int v) : value_(Rational(v)) {}
  Scalar(long v) : value_(Rational(v)) {}
  Scalar(Rational v) : value_(std::move(v)) {}
  Scalar(const Integer& v) : value_(Rational(v)) {}
  explicit Scalar(double v) : value_(v) {}

  static Scalar real(double v) { return Scalar(v); }

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  const Rational& rational() const;
  double to_double() const;
  int sign() const;
  bool is_zero() const { return sign() == 0; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::partial_ordering operator<=>(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  std::variant<Rational, double> value_;
};

Scalar abs(const Scalar& s);

}  // namespace mcshane
