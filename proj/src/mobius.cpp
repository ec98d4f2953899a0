#include "mcshane/mobius.hpp"

#include <algorithm>
#include <cmath>

namespace mcshane {

double Mat2d::scale() const {
  return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

InteriorPoint InteriorPoint::from_re_im(const Scalar& re, const Scalar& im) {
  if (im.sign() <= 0) throw DomainError("interior point needs im > 0");
  return {re, im * im};
}

double InteriorPoint::im() const { return std::sqrt(im_sq.to_double()); }

std::string to_string(IsometryClass c) {
  switch (c) {
    case IsometryClass::Identity: return "Identity";
    case IsometryClass::Elliptic: return "Elliptic";
    case IsometryClass::Parabolic: return "Parabolic";
    case IsometryClass::Hyperbolic: return "Hyperbolic";
  }
  return "?";
}

MobiusMap::MobiusMap() : e_{Scalar(1), Scalar(0), Scalar(0), Scalar(1)} {}

MobiusMap::MobiusMap(Unchecked, Scalar a, Scalar b, Scalar c, Scalar d)
    : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  normalize();
}

MobiusMap::MobiusMap(Scalar a, Scalar b, Scalar c, Scalar d)
    : MobiusMap(Unchecked{}, std::move(a), std::move(b), std::move(c), std::move(d)) {
  const Scalar det = determinant();
  if (det.is_exact()) {
    if (det.rational() != 1) throw DomainError("determinant must be 1, got " + det.to_string());
  } else if (std::abs(det.to_double() - 1.0) > 1e-12) {
    throw DomainError("determinant must be 1 within 1e-12, got " + det.to_string());
  }
}

MobiusMap MobiusMap::unchecked(Scalar a, Scalar b, Scalar c, Scalar d) {
  return MobiusMap(Unchecked{}, std::move(a), std::move(b), std::move(c), std::move(d));
}

MobiusMap MobiusMap::translation(const Scalar& t) { return unchecked(1, t, 0, 1); }

void MobiusMap::normalize() {
  for (const auto& x : e_) {
    const int s = x.sign();
    if (s == 0) continue;
    if (s < 0)
      for (auto& y : e_) y = -y;
    return;
  }
  throw DomainError("zero matrix");
}

bool MobiusMap::is_exact() const {
  return std::all_of(e_.begin(), e_.end(), [](const Scalar& s) { return s.is_exact(); });
}

Mat2d MobiusMap::approx() const {
  return {e_[0].to_double(), e_[1].to_double(), e_[2].to_double(), e_[3].to_double()};
}

MobiusMap MobiusMap::inverse() const { return unchecked(e_[3], -e_[1], -e_[2], e_[0]); }

MobiusMap MobiusMap::power(long k) const {
  MobiusMap base = k < 0 ? inverse() : *this;
  unsigned long n = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  MobiusMap out;
  while (n) {
    if (n & 1) out = out * base;
    base = base * base;
    n >>= 1;
  }
  return out;
}

MobiusMap compose(const MobiusMap& m, const MobiusMap& n) {
  return MobiusMap::unchecked(m.a() * n.a() + m.b() * n.c(), m.a() * n.b() + m.b() * n.d(),
                              m.c() * n.a() + m.d() * n.c(), m.c() * n.b() + m.d() * n.d());
}

MobiusMap conjugate(const MobiusMap& c, const MobiusMap& m) { return c * m * c.inverse(); }

BoundaryPoint MobiusMap::apply(const BoundaryPoint& p) const {
  const auto& [a, b, c, d] = e_;
  if (p.is_infinite()) {
    if (c.is_zero()) return BoundaryPoint::infinity();
    return BoundaryPoint(a / c);
  }
  if (is_exact() && p.is_rational()) {
    const Rational& x = p.rational();
    const Rational den = c.rational() * x + d.rational();
    if (den == 0) return BoundaryPoint::infinity();
    return BoundaryPoint(Rational((a.rational() * x + b.rational()) / den));
  }
  if (is_exact() && p.is_surd()) {
    const QuadraticSurd& s = p.surd();
    // (P + Q r) / (R + S r) with r = sqrt(D)
    const Rational P = a.rational() * s.u() + b.rational();
    const Rational Q = a.rational() * s.v();
    const Rational R = c.rational() * s.u() + d.rational();
    const Rational S = c.rational() * s.v();
    const Rational norm = R * R - S * S * s.d();
    if (norm == 0) return BoundaryPoint::infinity();
    return BoundaryPoint(QuadraticSurd(Rational((P * R - Q * S * s.d()) / norm),
                                       Rational((Q * R - P * S) / norm), s.d()));
  }
  const double x = p.to_double();
  const double den = c.to_double() * x + d.to_double();
  if (den == 0.0) return BoundaryPoint::infinity();
  return BoundaryPoint((a.to_double() * x + b.to_double()) / den);
}

InteriorPoint MobiusMap::apply(const InteriorPoint& z) const {
  const auto& [a, b, c, d] = e_;
  // |cz + d|^2 and Re((az + b) conj(cz + d)) expressed through re and im^2
  const Scalar mod_sq = z.re * z.re + z.im_sq;
  const Scalar den = (c * z.re + d) * (c * z.re + d) + c * c * z.im_sq;
  const Scalar re = (a * c * mod_sq + (a * d + b * c) * z.re + b * d) / den;
  const Scalar im_sq = z.im_sq / (den * den);
  return {re, im_sq};
}

Classification MobiusMap::classify() const {
  const Scalar tr = trace();
  const auto& [a, b, c, d] = e_;
  if (is_exact()) {
    if (b.is_zero() && c.is_zero() && a == d) return {IsometryClass::Identity, tr};
    const int k = cmp(abs(tr.rational()), Rational(2));
    if (k < 0) return {IsometryClass::Elliptic, tr};
    if (k == 0) return {IsometryClass::Parabolic, tr};
    return {IsometryClass::Hyperbolic, tr};
  }
  const Mat2d m = approx();
  const double tol = 1e-12 * std::max(1.0, m.scale());
  if (std::abs(m.b) <= tol && std::abs(m.c) <= tol && std::abs(m.a - m.d) <= tol)
    return {IsometryClass::Identity, tr};
  const double t = std::abs(tr.to_double());
  if (std::abs(t - 2.0) <= kParabolicBand) return {IsometryClass::Parabolic, tr};
  return {t < 2.0 ? IsometryClass::Elliptic : IsometryClass::Hyperbolic, tr};
}

FixedPoints MobiusMap::fixed_points() const {
  const auto cls = classify();
  if (cls.kind == IsometryClass::Identity || cls.kind == IsometryClass::Elliptic)
    throw DomainError("fixed points on the boundary need a parabolic or hyperbolic map, got " +
                      mcshane::to_string(cls.kind));
  const bool parabolic = cls.kind == IsometryClass::Parabolic;
  const auto& [a, b, c, d] = e_;
  const int trace_sign = cls.trace.sign();

  if (c.is_zero()) {
    // z -> (a z + b)/d
    if (parabolic) return {BoundaryPoint::infinity(), std::nullopt};
    BoundaryPoint finite(b / (d - a));
    const bool inf_attracts = abs(a) > abs(d);
    if (inf_attracts) return {BoundaryPoint::infinity(), finite};
    return {finite, BoundaryPoint::infinity()};
  }

  if (is_exact()) {
    const Rational two_c = 2 * c.rational();
    const Rational u = (a.rational() - d.rational()) / two_c;
    if (parabolic) return {BoundaryPoint(u), std::nullopt};
    const Rational disc = cls.trace.rational() * cls.trace.rational() - 4;
    const Rational v = Rational(trace_sign) / two_c;
    return {BoundaryPoint(QuadraticSurd(u, v, disc)), BoundaryPoint(QuadraticSurd(u, -v, disc))};
  }

  const double cd = c.to_double();
  const double u = (a.to_double() - d.to_double()) / (2 * cd);
  if (parabolic) return {BoundaryPoint(u), std::nullopt};
  const double t = cls.trace.to_double();
  const double root = std::sqrt(std::max(0.0, t * t - 4.0));
  const double v = trace_sign / (2 * cd);
  return {BoundaryPoint(u + v * root), BoundaryPoint(u - v * root)};
}

double MobiusMap::translation_length() const {
  const auto cls = classify();
  if (cls.kind != IsometryClass::Hyperbolic) throw DomainError("translation length needs a hyperbolic map");
  return 2.0 * std::acosh(std::abs(cls.trace.to_double()) / 2.0);
}

bool operator==(const MobiusMap& m, const MobiusMap& n) {
  return m.a() == n.a() && m.b() == n.b() && m.c() == n.c() && m.d() == n.d();
}

bool approx_equal(const MobiusMap& m, const MobiusMap& n, double tol) {
  const Mat2d x = m.approx();
  const Mat2d y = n.approx();
  const double s = tol * std::max({1.0, x.scale(), y.scale()});
  auto close = [&](double sign) {
    return std::abs(x.a - sign * y.a) <= s && std::abs(x.b - sign * y.b) <= s &&
           std::abs(x.c - sign * y.c) <= s && std::abs(x.d - sign * y.d) <= s;
  };
  return close(1.0) || close(-1.0);
}

std::string MobiusMap::to_string() const {
  return "[[" + e_[0].to_string() + ", " + e_[1].to_string() + "], [" + e_[2].to_string() + ", " +
         e_[3].to_string() + "]]";
}

}  // namespace mcshane
