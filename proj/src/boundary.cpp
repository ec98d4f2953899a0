#include "mcshane/boundary.hpp"

#include <cmath>
#include <cstdio>

namespace mcshane {

BoundaryPoint::BoundaryPoint(QuadraticSurd s) {
  if (s.is_rational()) {
    value_ = s.u();
  } else {
    value_ = std::move(s);
  }
}

BoundaryPoint::BoundaryPoint(const Scalar& s) {
  if (s.is_exact()) {
    value_ = s.rational();
  } else {
    value_ = s.to_double();
  }
}

const Rational& BoundaryPoint::rational() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return *q;
  throw DomainError("boundary point is not rational");
}

const QuadraticSurd& BoundaryPoint::surd() const {
  if (const auto* s = std::get_if<QuadraticSurd>(&value_)) return *s;
  throw DomainError("boundary point is not a quadratic surd");
}

QuadraticSurd BoundaryPoint::as_surd() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return QuadraticSurd(*q, 0, 1);
  return surd();
}

Scalar BoundaryPoint::scalar() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return Scalar(*q);
  if (is_infinite()) throw DomainError("infinite boundary point has no scalar value");
  return Scalar(to_double());
}

double BoundaryPoint::to_double() const {
  return std::visit(
      [](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Infinity>) {
          return HUGE_VAL;
        } else if constexpr (std::is_same_v<T, Rational>) {
          return mcshane::to_double(v);
        } else if constexpr (std::is_same_v<T, QuadraticSurd>) {
          return v.to_double();
        } else {
          return v;
        }
      },
      value_);
}

BoundaryPoint BoundaryPoint::operator+(const Rational& shift) const {
  return std::visit(
      [&](const auto& v) -> BoundaryPoint {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Infinity>) {
          return BoundaryPoint::infinity();
        } else if constexpr (std::is_same_v<T, Rational>) {
          return BoundaryPoint(Rational(v + shift));
        } else if constexpr (std::is_same_v<T, QuadraticSurd>) {
          return BoundaryPoint(v + shift);
        } else {
          return BoundaryPoint(v + mcshane::to_double(shift));
        }
      },
      value_);
}

std::string BoundaryPoint::to_string() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Infinity>) {
          return "inf";
        } else if constexpr (std::is_same_v<T, Rational>) {
          return v.get_str();
        } else if constexpr (std::is_same_v<T, QuadraticSurd>) {
          return v.to_string();
        } else {
          char buf[40];
          std::snprintf(buf, sizeof buf, "%.17g", v);
          return buf;
        }
      },
      value_);
}

int compare(const BoundaryPoint& p, const BoundaryPoint& q, double tol) {
  if (p.is_infinite() || q.is_infinite()) throw DomainError("compare needs finite points");
  if (p.is_exact() && q.is_exact()) {
    if (p.is_rational() && q.is_rational()) return cmp(p.rational(), q.rational());
    if (p.is_rational()) return -compare(q.surd(), p.rational());
    if (q.is_rational()) return compare(p.surd(), q.rational());
    return compare(p.surd(), q.surd());
  }
  const double a = p.to_double();
  const double b = q.to_double();
  if (std::abs(a - b) <= tol * (1.0 + std::abs(a) + std::abs(b))) return 0;
  return a < b ? -1 : 1;
}

bool same_point(const BoundaryPoint& p, const BoundaryPoint& q, double tol) {
  if (p.is_infinite() || q.is_infinite()) return p.is_infinite() && q.is_infinite();
  return compare(p, q, tol) == 0;
}

BoundaryPoint reduce_mod1(const BoundaryPoint& p, Integer* shift) {
  if (p.is_infinite()) throw DomainError("cannot reduce infinity mod 1");
  Integer n;
  if (p.is_rational()) {
    n = floor(p.rational());
  } else {
    n = Integer(std::floor(p.to_double()));
    if (p.is_exact()) {
      // correct a possible off-by-one from rounding near an integer
      while (compare(p, BoundaryPoint(Rational(n))) < 0) n -= 1;
      while (compare(p, BoundaryPoint(Rational(n + 1))) >= 0) n += 1;
    }
  }
  if (shift) *shift = n;
  return p + Rational(-n);
}

}  // namespace mcshane
