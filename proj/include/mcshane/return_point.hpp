#pragma once

#include "mcshane/boundary.hpp"
#include "mcshane/mobius.hpp"
#include "mcshane/torus_group.hpp"
#include "mcshane/word.hpp"

namespace mcshane {

/// Intersection p of the vertical lift over x with g(lift) such that p sits
/// strictly below g^-1(p).
struct ReturnPoint {
  Word word;
  MobiusMap map;
  InteriorPoint point;
  /// Same (word, point) found at radius + 2.
  bool stable = false;
  int radius = 0;
};

/// The return point of greatest height among g in ball(radius); equal heights
/// go to the shortlex-smallest word. Needs a rational x on the modular torus
/// (exact heights) or a binary64 x on a Fricke group. Throws DomainError when
/// no return point exists at this radius. With `check_stability` the scan is
/// repeated at radius + 2 to fill in `stable`.
ReturnPoint highest_point_of_return(const PuncturedTorusGroup& g, const BoundaryPoint& x, int radius,
                                    bool check_stability = true);

/// g(oo) for the highest return point g, checked to be simple at `radius`
/// and a cusp lift; a failed check raises InvariantViolation.
BoundaryPoint simple_center_from(const PuncturedTorusGroup& g, const BoundaryPoint& x, int radius);

}  // namespace mcshane
