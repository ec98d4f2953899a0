#pragma once

#include "mcshane/geodesic.hpp"
#include "mcshane/mobius.hpp"
#include "mcshane/torus_group.hpp"
#include "mcshane/word.hpp"

#include <optional>

namespace mcshane {

/// Outcome of a ball scan. `witness` is set iff some g in the ball moves the
/// geodesic onto a crossing image; otherwise nothing was found up to `radius`,
/// which is not a proof of simplicity.
struct SimplicityVerdict {
  int radius = 0;
  std::optional<Word> witness;
  std::optional<InteriorPoint> crossing_point;

  bool non_simple() const { return witness.has_value(); }
};

/// Does g(gamma) cross gamma? A binary64 filter decides clear cases; values
/// within the filter margin are recomputed from the exact word (exact for
/// exact groups and endpoints, relative tolerance 1e-12 otherwise).
class CrossingTest {
 public:
  CrossingTest(const PuncturedTorusGroup& g, const Geodesic& gamma);
  bool operator()(const Word& w, const Mat2d& m) const;
  /// The predicate evaluated on an exact group element, no filter.
  bool exact(const MobiusMap& m) const;

 private:
  // -1 / +1 decided, 0 undecided
  int filter(const Mat2d& m) const;

  const PuncturedTorusGroup& g_;
  Geodesic gamma_;
  bool vertical_;
  double x_ = 0;       // finite endpoint of a vertical gamma
  double lo_ = 0;      // span of a finite gamma
  double hi_ = 0;
};

/// Scans ball(radius) in shortlex order and reports the first g with
/// crosses(gamma, g(gamma)).
SimplicityVerdict is_simple_ball(const PuncturedTorusGroup& g, const Geodesic& gamma, int radius);

}  // namespace mcshane
