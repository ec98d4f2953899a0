#pragma once

#include "mcshane/boundary.hpp"
#include "mcshane/mobius.hpp"

namespace mcshane {

/// Oriented complete geodesic of the upper half-plane, start != end.
class Geodesic {
 public:
  Geodesic(BoundaryPoint start, BoundaryPoint end);

  const BoundaryPoint& start() const { return start_; }
  const BoundaryPoint& end() const { return end_; }
  bool is_vertical() const { return start_.is_infinite() || end_.is_infinite(); }
  bool is_exact() const { return start_.is_exact() && end_.is_exact(); }

  Geodesic reversed() const { return {end_, start_}; }
  Geodesic image(const MobiusMap& m) const { return {m.apply(start_), m.apply(end_)}; }

 private:
  BoundaryPoint start_;
  BoundaryPoint end_;
};

/// The downward vertical lift (oo -> x).
Geodesic vertical_lift(const BoundaryPoint& x);

/// True iff the endpoint pairs strictly interleave on R u {oo}; a shared
/// endpoint never counts as a crossing. Exact for exact endpoints; binary64
/// endpoints are compared with relative tolerance `tol`.
bool crosses(const Geodesic& g1, const Geodesic& g2, double tol = 1e-12);

/// The common point of two crossing geodesics.
InteriorPoint intersection_point(const Geodesic& g1, const Geodesic& g2);

/// Euclidean horocycle Im z = height around the cusp at oo (period 1).
struct Horocycle {
  Scalar height{1};
};

/// Real coordinate of the first point where g meets the horocycle, in the
/// direction of travel; optionally reduced to [0, 1).
BoundaryPoint horocycle_coordinate(const Geodesic& g, const Horocycle& h, bool reduce = false);

}  // namespace mcshane
