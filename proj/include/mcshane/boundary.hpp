#pragma once

#include "mcshane/scalar.hpp"
#include "mcshane/surd.hpp"

#include <optional>
#include <string>
#include <variant>

namespace mcshane {

struct Infinity {
  friend bool operator==(Infinity, Infinity) { return true; }
};

/// A point of R u {oo}. Exact points are rationals or quadratic surds;
/// inexact points carry a binary64 value.
class BoundaryPoint {
 public:
  BoundaryPoint() : value_(Infinity{}) {}
  BoundaryPoint(Infinity) : value_(Infinity{}) {}
  BoundaryPoint(Rational q) : value_(std::move(q)) {}
  BoundaryPoint(long q) : value_(Rational(q)) {}
  BoundaryPoint(int q) : value_(Rational(q)) {}
  BoundaryPoint(QuadraticSurd s);
  BoundaryPoint(const Scalar& s);
  explicit BoundaryPoint(double x) : value_(x) {}

  static BoundaryPoint infinity() { return BoundaryPoint(Infinity{}); }
  static BoundaryPoint real(double x) { return BoundaryPoint(x); }

  bool is_infinite() const { return std::holds_alternative<Infinity>(value_); }
  bool is_finite() const { return !is_infinite(); }
  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  bool is_surd() const { return std::holds_alternative<QuadraticSurd>(value_); }
  /// Infinity, rationals and surds are exact.
  bool is_exact() const { return !std::holds_alternative<double>(value_); }

  const Rational& rational() const;
  const QuadraticSurd& surd() const;
  /// Surd view of an exact finite point (rationals get v = 0).
  QuadraticSurd as_surd() const;
  /// Scalar view of a finite rational or real point.
  Scalar scalar() const;
  double to_double() const;

  BoundaryPoint operator+(const Rational& shift) const;

  std::string to_string() const;

 private:
  std::variant<Infinity, Rational, QuadraticSurd, double> value_;
};

/// Three-way comparison of finite points on R. Exact when both points are
/// exact; otherwise binary64, reporting 0 when |p - q| <= tol * (1 + |p| + |q|).
int compare(const BoundaryPoint& p, const BoundaryPoint& q, double tol = 0.0);

/// Point equality on R u {oo} (same tolerance policy as compare).
bool same_point(const BoundaryPoint& p, const BoundaryPoint& q, double tol = 0.0);

/// Representative of p modulo 1 in [0, 1), with the integer shift applied.
BoundaryPoint reduce_mod1(const BoundaryPoint& p, Integer* shift = nullptr);

}  // namespace mcshane
