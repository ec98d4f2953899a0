#pragma once

#include "mcshane/scalar.hpp"
#include "mcshane/torus_group.hpp"
#include "mcshane/word.hpp"

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace mcshane {

/// Slope p/q of a simple closed curve on the punctured torus, in lowest
/// terms with q > 0, or 1/0.
class Slope {
 public:
  Slope(Integer p, Integer q);
  static Slope from_string(const std::string& text);

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  bool is_infinite() const { return q_ == 0; }

  friend bool operator==(const Slope&, const Slope&) = default;
  friend bool operator<(const Slope& s, const Slope& t);
  std::string to_string() const;

 private:
  Integer p_, q_;
};

/// Corners of a Farey triangle with their traces; every Vieta move keeps
/// t1^2 + t2^2 + t3^2 = t1 t2 t3.
struct MarkovTriple {
  std::array<Slope, 3> slopes;
  std::array<Scalar, 3> traces;

  /// Replaces corner k by its Farey partner across the opposite edge.
  MarkovTriple move(int k) const;
  /// t1^2 + t2^2 + t3^2 - t1 t2 t3.
  Scalar relation_residual() const;
};

/// Farey triangle (0/1, 1/1, 1/0) with traces (x, z, y).
MarkovTriple root_triple(const PuncturedTorusGroup& g);

/// Applies trace-decreasing Vieta moves until none remains, so that every
/// move away from the result strictly increases the replaced trace.
MarkovTriple reduce_root(MarkovTriple t);

/// The Farey neighbour of edge (s1, s2) other than `opposite`.
Slope farey_partner(const Slope& s1, const Slope& s2, const Slope& opposite);

struct SlopeNode {
  Slope slope;
  Scalar trace;
  int depth;
};

/// Edge (s1, s2) of a Farey triangle whose third corner is `opposite`. The
/// subtree below it starts with the mediant across the edge at `depth`.
struct TreeEdge {
  Slope s1;
  Scalar t1;
  Slope s2;
  Scalar t2;
  Slope opposite;
  Scalar t_opposite;
  int depth;

  /// The mediant node across the edge, checked for trace growth.
  SlopeNode node() const;
  /// The two edges below the mediant.
  std::array<TreeEdge, 2> children(const SlopeNode& mediant) const;
};

/// Reduced root triple with its three edges.
struct TreeRoot {
  MarkovTriple triple;
  std::array<TreeEdge, 3> edges;  // edges[k] is opposite corner k
};
TreeRoot tree_root(const PuncturedTorusGroup& g);

/// Depth-first walk of the subtree below `e` (pre-order, first child first).
void walk_edge(const TreeEdge& e, int max_depth, const std::function<bool(const SlopeNode&)>& visit);

/// Depth-first walk over the slope tree from the reduced root. The three root
/// corners come first at depth 0; each further node replaces a corner by the
/// Farey mediant with trace t' = t_a t_b - t. `visit` returns whether to
/// descend below the node. Non-increasing Vieta steps raise InvariantViolation.
void walk_slope_tree(const PuncturedTorusGroup& g, int max_depth,
                     const std::function<bool(const SlopeNode&)>& visit);

/// Every slope up to `max_depth`, each exactly once, in walk order.
std::vector<SlopeNode> slope_tree(const PuncturedTorusGroup& g, int max_depth);

/// Positive word in A, B of length |p| + q representing slope p/q (B
/// replaced by B^-1 when p < 0): 0/1 -> A, 1/0 -> B, 1/1 -> AB, and the
/// mediant of Farey neighbours l < r is W(l) W(r).
Word christoffel_word(const Slope& s);

/// christoffel_word(s) together with a partner word completing it to a free
/// basis of the group.
struct ChristoffelPair {
  Word word;
  Word partner;
};
ChristoffelPair christoffel_pair(const Slope& s);

}  // namespace mcshane
