#pragma once

#include "mcshane/scalar.hpp"

#include <string>

namespace mcshane {

/// Real number u + v*sqrt(d) with rational u, v and rational d > 0.
/// Fixed points of rational hyperbolic maps live in this form, which lets
/// order predicates between deadzone endpoints run without rounding.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(Rational u, Rational v, Rational d);

  const Rational& u() const { return u_; }
  const Rational& v() const { return v_; }
  const Rational& d() const { return d_; }

  /// True when the value is rational (v == 0 or d a rational square).
  bool is_rational() const { return v_ == 0; }

  int sign() const;
  /// Accurate to a few ulps even when u and v*sqrt(d) nearly cancel.
  double to_double() const;

  QuadraticSurd operator-() const { return {-u_, -v_, d_}; }
  QuadraticSurd operator+(const Rational& q) const { return {u_ + q, v_, d_}; }
  QuadraticSurd operator-(const Rational& q) const { return {u_ - q, v_, d_}; }
  QuadraticSurd operator*(const Rational& q) const { return {u_ * q, v_ * q, d_}; }

  std::string to_string() const;

 private:
  Rational u_{0};
  Rational v_{0};
  Rational d_{1};
};

/// Sign of a + b*sqrt(d1) + c*sqrt(d2), exact.
int sign_of(const Rational& a, const Rational& b, const Rational& d1, const Rational& c,
            const Rational& d2);

/// Exact three-way comparison.
int compare(const QuadraticSurd& x, const QuadraticSurd& y);
int compare(const QuadraticSurd& x, const Rational& q);

/// Exact sqrt of a non-negative rational if it is a perfect square.
bool exact_sqrt(const Rational& q, Rational& root);

}  // namespace mcshane
