#pragma once

#include "mcshane/boundary.hpp"
#include "mcshane/deadzone.hpp"
#include "mcshane/slope_tree.hpp"
#include "mcshane/torus_group.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace mcshane {

/// 1 / (1 + e^l) for the simple closed geodesic of trace t > 2, where
/// e^(l/2) = (t + sqrt(t^2 - 4)) / 2.
double term(const Scalar& trace);

/// Fixed-shape pairwise summation; the result depends only on the order of
/// the input.
double pairwise_sum(std::span<const double> values);

struct SumOptions {
  /// Stop descending below a node whose term is < eps.
  std::optional<double> eps;
  /// Visit every slope up to this depth.
  std::optional<int> depth;
  unsigned threads = 1;
};

struct IdentityReport {
  double sum = 0;
  std::size_t terms = 0;
  /// Largest term of a node whose subtree was cut by eps.
  double largest_pruned = 0;
  /// Deepest node visited.
  int depth = 0;
  std::optional<double> eps;
  std::optional<int> depth_bound;
  double residual = 0;  // |sum - 1/2|
};

/// Sum of term(trace) over distinct slopes, walking the slope tree
/// depth-first. Exactly one of opts.eps and opts.depth must be set. The
/// reduction order is fixed, so the result is independent of opts.threads.
IdentityReport mcshane_sum(const PuncturedTorusGroup& g, const SumOptions& opts);

/// One deadzone of the coverage scan, translated so the center lies in [0, 1).
struct CoverageEntry {
  Slope slope;
  int orientation;  // 0: X(oo), 1: X^-1(oo)
  Deadzone deadzone;
  BoundaryPoint center;
  BoundaryPoint left;
  BoundaryPoint right;
};

struct ScanCounts {
  std::size_t non_simple = 0;
  std::size_t no_crossing = 0;
  std::size_t cusp_center = 0;
};

struct CoverageReport {
  int depth = 0;
  int radius = 0;
  std::vector<CoverageEntry> deadzones;  // sorted by center
  double total_width = 0;
  /// 2 * sum of term(trace) over the same slopes.
  double identity_twice = 0;
  std::size_t overlaps = 0;
  std::optional<ScanCounts> scan;
};

/// Two oriented centers per slope up to `depth`: with W the slope word, V a
/// basis partner and c in G normalizing [W, V] to a power of P, the centers
/// are X(oo) and X^-1(oo) for X = c W c^-1. Their deadzones are reduced mod 1,
/// checked pairwise disjoint and summed. When radius > 0 every center must
/// also pass is_simple_ball at that radius. Raises InvariantViolation on an
/// overlap or when a deadzone fails to end at a fixed point of X.
CoverageReport gap_measure(const PuncturedTorusGroup& g, int depth, int radius, unsigned threads = 1);

enum class ScanVerdict { NonSimple, NoCrossing, CuspCenter };
const char* to_string(ScanVerdict v);

struct ScanPoint {
  BoundaryPoint x;
  ScanVerdict verdict;
  int witness_length;  // 0 unless NonSimple
  int deadzone_id;     // index into `deadzones`, -1 if outside all of them
};

/// Classifies x = k * step in [0, 1) by is_simple_ball(radius). Grid points
/// equal to a center of `deadzones` are reported as CuspCenter.
std::vector<ScanPoint> scan_simplicity(const PuncturedTorusGroup& g, const Scalar& step, int radius,
                                       const std::vector<CoverageEntry>& deadzones, unsigned threads = 1);
ScanCounts count_verdicts(const std::vector<ScanPoint>& points);

/// Runs `fn(i)` for i in [0, n) on up to `threads` threads.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace mcshane
