#include "mcshane/deadzone.hpp"

#include "mcshane/ball.hpp"

#include <cmath>

namespace mcshane {

const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }

namespace {

double tolerance_for(const BoundaryPoint& p) { return p.is_exact() ? 0.0 : 1e-12; }

// e^l = ((t + sqrt(t^2 - 4)) / 2)^2 for the translation length l of a map of trace t
double exp_length(double t) {
  const double h = (t + t * std::sqrt(1 - 4 / (t * t))) / 2;
  return h * h;
}

// Attracting fixed point minus f(oo), free of cancellation:
// -2 sign(t) / (c (|t| + sqrt(t^2 - 4))).
double attracting_offset(const MobiusMap& f) {
  const Mat2d m = f.approx();
  const double t = m.a + m.d;
  const double at = std::abs(t);
  return -2 * (t > 0 ? 1 : -1) / (m.c * (at + std::sqrt((at - 2) * (at + 2))));
}

}  // namespace

MobiusMap neighbor_map(const PuncturedTorusGroup& g, const BoundaryPoint& x, Side side,
                       const std::optional<MobiusMap>& hint) {
  if (!x.is_finite()) throw DomainError("neighbor maps need a finite center");
  const MobiusMap h = hint ? *hint : cusp_solver(g, x);
  const double tol = tolerance_for(x);
  if (!same_point(h.apply(BoundaryPoint::infinity()), x, g.is_exact() ? tol : 1e-9))
    throw DomainError("cusp map does not send oo to " + x.to_string());
  const BoundaryPoint w = h.inverse().apply(BoundaryPoint::infinity());

  long n = 0;
  if (w.is_rational() && x.is_rational()) {
    const Rational diff = w.rational() - x.rational();
    if (diff.get_den() == 1) throw DomainError("degenerate center " + x.to_string() + ": h^-1(oo) - x is an integer");
    n = floor(diff).get_si();
  } else {
    const double diff = w.to_double() - x.to_double();
    if (std::abs(diff - std::round(diff)) < 1e-9)
      throw DomainError("degenerate center " + x.to_string() + ": h^-1(oo) - x is an integer");
    n = static_cast<long>(std::floor(diff));
  }

  std::optional<MobiusMap> right, left;
  for (long k : {n, n + 1}) {
    MobiusMap f = h * MobiusMap::translation(Scalar(k));
    // f(oo) = x gives f(x) - x = -1 / (c tr f), which keeps its sign in binary64
    const int s = f.is_exact() ? compare(f.apply(x), x, tol) : -(f.c() * f.trace()).sign();
    if (s > 0 && !right) right = std::move(f);
    else if (s < 0 && !left) left = std::move(f);
  }
  if (!right || !left) throw InvariantViolation("adjacent preimages of the lift over " + x.to_string() +
                                                " do not straddle it");
  MobiusMap& f = side == Side::Right ? *right : *left;
  if (f.classify().kind != IsometryClass::Hyperbolic)
    throw InvariantViolation("neighbor map at " + x.to_string() + " is not hyperbolic");
  return f;
}

double Deadzone::gap_residual() const { return width * (1 + exp_length(trace().to_double())) - 1; }

bool Deadzone::contains(const BoundaryPoint& y) const {
  const double tol = left.is_exact() && y.is_exact() ? 0.0 : 1e-12;
  return compare(left, y, tol) < 0 && compare(y, right, tol) < 0;
}

Deadzone deadzone_of(const PuncturedTorusGroup& g, const BoundaryPoint& x, int radius,
                     const std::optional<MobiusMap>& hint) {
  if (radius > 0 && is_simple_ball(g, vertical_lift(x), radius).non_simple())
    throw DomainError("center " + x.to_string() + " is not simple at radius " + std::to_string(radius));
  std::optional<MobiusMap> h = hint;
  if (!h) h = cusp_solver(g, x);
  MobiusMap fr = neighbor_map(g, x, Side::Right, h);
  MobiusMap fl = neighbor_map(g, x, Side::Left, h);
  BoundaryPoint r = fr.fixed_points().attracting;
  BoundaryPoint l = fl.fixed_points().attracting;
  double lo, ro;
  if (x.is_rational() && l.is_exact() && r.is_exact()) {
    if (!(compare(l, x) < 0 && compare(x, r) < 0))
      throw InvariantViolation("deadzone endpoints do not straddle " + x.to_string());
    ro = (r.as_surd() - x.rational()).to_double();
    lo = (-(l.as_surd() - x.rational())).to_double();
  } else {
    ro = attracting_offset(fr);
    lo = -attracting_offset(fl);
    if (!(lo > 0 && ro > 0)) throw InvariantViolation("deadzone endpoints do not straddle " + x.to_string());
  }
  Deadzone dz{x, std::move(fr), std::move(fl), std::move(l), std::move(r), lo, ro, lo + ro, radius};
  if (!(dz.width > 0 && dz.width < 1)) throw InvariantViolation("deadzone width out of (0, 1) at " + x.to_string());
  return dz;
}

EndpointCheck verify_endpoints(const PuncturedTorusGroup& g, const Deadzone& dz, int radius) {
  return {is_simple_ball(g, vertical_lift(dz.left), radius), is_simple_ball(g, vertical_lift(dz.right), radius),
          is_cusp_lift(g, dz.left), is_cusp_lift(g, dz.right)};
}

std::vector<BoundaryPoint> chain(const Deadzone& dz, Side side, int steps) {
  const MobiusMap& f = side == Side::Right ? dz.right_map : dz.left_map;
  std::vector<BoundaryPoint> out{dz.center};
  for (int i = 0; i < steps; ++i) out.push_back(f.apply(out.back()));
  return out;
}

SpiralTarget spiral_target(const PuncturedTorusGroup& g, const Deadzone& dz, Side side, int radius) {
  const MobiusMap& f = side == Side::Right ? dz.right_map : dz.left_map;
  const FixedPoints fp = f.fixed_points();
  Geodesic axis(*fp.repelling, fp.attracting);
  return {axis, abs(f.trace()), f.translation_length(), is_simple_ball(g, axis, radius)};
}

namespace {

// Some ball element other than `self` fixes q and sends oo beyond c, on the side
// of c away from q.
bool has_farther_stabilizer(const PuncturedTorusGroup& g, const MobiusMap& self, const BoundaryPoint& q,
                            const BoundaryPoint& c, int radius) {
  const double qd = q.to_double();
  const double tol = g.is_exact() && q.is_exact() ? 0.0 : 1e-9;
  const bool c_left_of_q = compare(c, q, tol) < 0;
  bool found = false;
  for_each_in_ball(g, radius, [&](const Word& w, const Mat2d& m) {
    const double image = (m.a * qd + m.b) / (m.c * qd + m.d);
    if (!(std::abs(image - qd) <= 1e-6 * (1 + std::abs(qd)))) return true;
    const MobiusMap e = g.evaluate(w);
    if (e == self || !same_point(e.apply(q), q, tol)) return true;
    const BoundaryPoint y = e.apply(BoundaryPoint::infinity());
    if (y.is_infinite()) return true;
    found = c_left_of_q ? compare(y, c, tol) < 0 : compare(c, y, tol) < 0;
    return !found;
  });
  return found;
}

}  // namespace

BoundaryPoint center_from_axis(const PuncturedTorusGroup& g, const MobiusMap& f, int radius) {
  if (f.classify().kind != IsometryClass::Hyperbolic) throw DomainError("center_from_axis needs a hyperbolic map");
  const FixedPoints fp = f.fixed_points();
  const double match_tol = g.is_exact() ? 0.0 : 1e-9;
  const double trace_f = abs(f.trace()).to_double();

  for (const MobiusMap& m : {f, f.inverse()}) {
    const BoundaryPoint c = m.apply(BoundaryPoint::infinity());
    if (c.is_infinite()) continue;
    if (is_simple_ball(g, vertical_lift(c), radius).non_simple()) continue;
    std::optional<Deadzone> dz;
    try {
      dz = deadzone_of(g, c, 0, m);
    } catch (const DomainError&) {
      continue;
    }
    for (const BoundaryPoint* end : {&dz->left, &dz->right}) {
      const BoundaryPoint* q = nullptr;
      if (same_point(*end, fp.attracting, match_tol)) q = &fp.attracting;
      else if (same_point(*end, *fp.repelling, match_tol)) q = &*fp.repelling;
      if (!q) continue;
      const double trace_side = dz->trace().to_double();
      if (trace_f > trace_side * (1 + 1e-12))
        throw DomainError("map is not primitive: it shares fixed points with a side map of smaller trace");
      if (has_farther_stabilizer(g, m, *q, c, radius))
        throw DomainError("f(oo) is not extremal among stabilizer images of oo in ball(" +
                          std::to_string(radius) + ")");
      return c;
    }
  }
  throw DomainError("neither f(oo) nor f^-1(oo) validates as a center at radius " + std::to_string(radius));
}

}  // namespace mcshane
