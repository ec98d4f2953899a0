#include "mcshane/geodesic.hpp"

#include <cmath>
#include <utility>

namespace mcshane {

Geodesic::Geodesic(BoundaryPoint start, BoundaryPoint end)
    : start_(std::move(start)), end_(std::move(end)) {
  if (same_point(start_, end_)) throw DomainError("geodesic endpoints must differ");
}

Geodesic vertical_lift(const BoundaryPoint& x) {
  if (x.is_infinite()) throw DomainError("vertical lift needs a finite endpoint");
  return {BoundaryPoint::infinity(), x};
}

namespace {

// -1 / +1: q on the left / right of the vertical line through x; 0: q == x.
// q == oo is reported as 2.
int side_of_vertical(const BoundaryPoint& x, const BoundaryPoint& q, double tol) {
  if (q.is_infinite()) return 2;
  return compare(q, x, tol);
}

}  // namespace

bool crosses(const Geodesic& g1, const Geodesic& g2, double tol) {
  const BoundaryPoint* p[2] = {&g1.start(), &g1.end()};
  const BoundaryPoint* q[2] = {&g2.start(), &g2.end()};
  for (auto* a : p)
    for (auto* b : q)
      if (same_point(*a, *b, tol)) return false;

  if (g1.is_vertical() && g2.is_vertical()) return false;
  if (g2.is_vertical() && !g1.is_vertical()) return crosses(g2, g1, tol);

  if (g1.is_vertical()) {
    const BoundaryPoint& x = g1.start().is_infinite() ? g1.end() : g1.start();
    const int s0 = side_of_vertical(x, *q[0], tol);
    const int s1 = side_of_vertical(x, *q[1], tol);
    return s0 * s1 == -1;
  }

  // both finite: exactly one endpoint of g2 strictly inside the span of g1
  const bool forward = compare(*p[0], *p[1], tol) < 0;
  const BoundaryPoint& lo = forward ? *p[0] : *p[1];
  const BoundaryPoint& hi = forward ? *p[1] : *p[0];
  auto inside = [&](const BoundaryPoint& y) {
    return y.is_finite() && compare(lo, y, tol) < 0 && compare(y, hi, tol) < 0;
  };
  return inside(*q[0]) != inside(*q[1]);
}

InteriorPoint intersection_point(const Geodesic& g1, const Geodesic& g2) {
  if (!crosses(g1, g2)) throw DomainError("intersection_point needs crossing geodesics");
  if (g2.is_vertical()) return intersection_point(g2, g1);

  auto as_scalar = [](const BoundaryPoint& p) {
    return p.is_rational() ? Scalar(p.rational()) : Scalar(p.to_double());
  };
  const Scalar a2 = as_scalar(g2.start());
  const Scalar b2 = as_scalar(g2.end());

  if (g1.is_vertical()) {
    const Scalar x = as_scalar(g1.start().is_infinite() ? g1.end() : g1.start());
    const Scalar h = (x - a2) * (b2 - x);
    return {x, h.sign() < 0 ? -h : h};
  }

  const Scalar a1 = as_scalar(g1.start());
  const Scalar b1 = as_scalar(g1.end());
  const Scalar two(2);
  const Scalar m1 = (a1 + b1) / two;
  const Scalar m2 = (a2 + b2) / two;
  const Scalar r1 = ((b1 - a1) / two) * ((b1 - a1) / two);
  const Scalar r2 = ((b2 - a2) / two) * ((b2 - a2) / two);
  // subtracting the circle equations leaves a linear equation in Re z
  const Scalar re = (r1 - r2 + m2 * m2 - m1 * m1) / (two * (m2 - m1));
  const Scalar im_sq = r1 - (re - m1) * (re - m1);
  if (im_sq.sign() <= 0) throw DomainError("degenerate intersection");
  return {re, im_sq};
}

BoundaryPoint horocycle_coordinate(const Geodesic& g, const Horocycle& h, bool reduce) {
  if (h.height.sign() <= 0) throw DomainError("horocycle height must be positive");
  BoundaryPoint out;
  if (g.is_vertical()) {
    out = g.start().is_infinite() ? g.end() : g.start();
  } else {
    const double a = g.start().to_double();
    const double b = g.end().to_double();
    const double radius = std::abs(b - a) / 2.0;
    const double height = h.height.to_double();
    if (radius < height) throw DomainError("geodesic stays below the horocycle");
    const double centre = (a + b) / 2.0;
    const double offset = std::sqrt(radius * radius - height * height);
    out = BoundaryPoint(a < b ? centre - offset : centre + offset);
  }
  return reduce ? reduce_mod1(out) : out;
}

}  // namespace mcshane
