#pragma once

#include "mcshane/boundary.hpp"
#include "mcshane/geodesic.hpp"
#include "mcshane/mobius.hpp"
#include "mcshane/simplicity.hpp"
#include "mcshane/torus_group.hpp"

#include <optional>
#include <vector>

namespace mcshane {

enum class Side { Left, Right };
const char* to_string(Side s);

/// f in G with f(oo) = x carrying the vertical lift over x to its adjacent
/// preimage on the given side. `hint` may supply any h in G with h(oo) = x,
/// saving the cusp search on non-modular groups.
MobiusMap neighbor_map(const PuncturedTorusGroup& g, const BoundaryPoint& x, Side side,
                       const std::optional<MobiusMap>& hint = std::nullopt);

/// Open interval (l, r) around a simple bicuspidal center x.
struct Deadzone {
  BoundaryPoint center;
  MobiusMap right_map;
  MobiusMap left_map;
  BoundaryPoint left;   // attracting fixed point of left_map
  BoundaryPoint right;  // attracting fixed point of right_map
  double left_offset;   // x - l
  double right_offset;  // r - x
  double width;         // r - l
  /// Radius of the simplicity check on the center; 0 when it was skipped.
  int radius;

  /// |tr| of the side maps (equal on both sides).
  Scalar trace() const { return abs(right_map.trace()); }
  /// Length of the closed geodesic the deadzone spirals onto.
  double length() const { return right_map.translation_length(); }
  /// width * (1 + e^length) - 1.
  double gap_residual() const;
  /// Strict containment l < y < r.
  bool contains(const BoundaryPoint& y) const;
};

/// Builds the deadzone of x. When radius > 0 the center must pass
/// is_simple_ball at that radius, otherwise DomainError.
Deadzone deadzone_of(const PuncturedTorusGroup& g, const BoundaryPoint& x, int radius,
                     const std::optional<MobiusMap>& hint = std::nullopt);

/// Checks on the two endpoints: simplicity at `radius` and rejection as
/// cusp lifts.
struct EndpointCheck {
  SimplicityVerdict left_verdict;
  SimplicityVerdict right_verdict;
  bool left_is_cusp;
  bool right_is_cusp;

  bool ok() const {
    return !left_verdict.non_simple() && !right_verdict.non_simple() && !left_is_cusp && !right_is_cusp;
  }
};
EndpointCheck verify_endpoints(const PuncturedTorusGroup& g, const Deadzone& dz, int radius);

/// x_0 = x, x_i = f^i(x) for the side map f, i = 0..steps.
std::vector<BoundaryPoint> chain(const Deadzone& dz, Side side, int steps);

/// The simple closed geodesic a side of the deadzone spirals onto.
struct SpiralTarget {
  Geodesic axis;
  Scalar trace;
  double length;
  SimplicityVerdict verdict;
};
SpiralTarget spiral_target(const PuncturedTorusGroup& g, const Deadzone& dz, Side side, int radius);

/// Recovers the center whose deadzone has an endpoint fixed by f: tries f(oo)
/// and then f^-1(oo), keeping the first candidate that is simple at `radius`
/// and whose deadzone ends at a fixed point of f. Raises DomainError when f
/// is a proper power or no candidate validates.
BoundaryPoint center_from_axis(const PuncturedTorusGroup& g, const MobiusMap& f, int radius);

}  // namespace mcshane
