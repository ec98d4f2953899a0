#include "mcshane/identity.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <variant>

namespace mcshane {

double term(const Scalar& trace) {
  if (!(trace > Scalar(2))) throw DomainError("term needs trace > 2, got " + trace.to_string());
  const double t = trace.to_double();
  if (std::isinf(t)) return 0;
  const double h = (t + t * std::sqrt((1 - 2 / t) * (1 + 2 / t))) / 2;
  return 1 / (1 + h * h);
}

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) {
        try {
          fn(i);
        } catch (...) {
          const std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = n;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

namespace {

// Subtrees below this depth are expanded on worker threads.
constexpr int kSplitDepth = 4;

struct SumStats {
  std::vector<double> terms;
  double largest_pruned = 0;
  int depth = 0;

  void add(const SlopeNode& n, double t) {
    terms.push_back(t);
    depth = std::max(depth, n.depth);
  }
};

}  // namespace

IdentityReport mcshane_sum(const PuncturedTorusGroup& g, const SumOptions& opts) {
  if (opts.eps.has_value() == opts.depth.has_value())
    throw DomainError("mcshane_sum needs exactly one of eps and depth");
  if (opts.eps && !(*opts.eps > 0)) throw DomainError("eps must be positive");
  if (opts.depth && *opts.depth < 0) throw DomainError("depth must be non-negative");
  const int max_depth = opts.depth ? *opts.depth : INT_MAX / 2;

  // visits a node; returns whether to descend below it
  auto visit = [&](SumStats& s, const SlopeNode& n) {
    const double t = term(n.trace);
    s.add(n, t);
    if (opts.eps && t < *opts.eps) {
      s.largest_pruned = std::max(s.largest_pruned, t);
      return false;
    }
    return true;
  };

  // pre-order walk down to the split depth; deeper subtrees become work items
  // that keep their place in the reduction order
  std::vector<std::variant<double, TreeEdge>> items;
  SumStats head;
  std::function<void(const TreeEdge&)> expand = [&](const TreeEdge& e) {
    if (e.depth > max_depth) return;
    if (e.depth > kSplitDepth) {
      items.emplace_back(e);
      return;
    }
    const SlopeNode n = e.node();
    const bool open = visit(head, n);
    items.emplace_back(head.terms.back());
    if (open)
      for (const TreeEdge& c : e.children(n)) expand(c);
  };
  const TreeRoot root = tree_root(g);
  std::array<bool, 3> open{};
  for (int k = 0; k < 3; ++k) {
    open[k] = visit(head, SlopeNode{root.triple.slopes[k], root.triple.traces[k], 0});
    items.emplace_back(head.terms.back());
  }
  for (int k = 0; k < 3; ++k)
    if (open[(k + 1) % 3] && open[(k + 2) % 3]) expand(root.edges[k]);

  std::vector<SumStats> sub(items.size());
  parallel_for(items.size(), opts.threads, [&](std::size_t i) {
    if (const auto* e = std::get_if<TreeEdge>(&items[i]))
      walk_edge(*e, max_depth, [&](const SlopeNode& n) { return visit(sub[i], n); });
  });

  std::vector<double> all;
  IdentityReport r;
  r.largest_pruned = head.largest_pruned;
  r.depth = head.depth;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (const double* t = std::get_if<double>(&items[i])) {
      all.push_back(*t);
    } else {
      all.insert(all.end(), sub[i].terms.begin(), sub[i].terms.end());
      r.largest_pruned = std::max(r.largest_pruned, sub[i].largest_pruned);
      r.depth = std::max(r.depth, sub[i].depth);
    }
  }
  r.sum = pairwise_sum(all);
  r.terms = all.size();
  r.eps = opts.eps;
  r.depth_bound = opts.depth;
  r.residual = std::abs(r.sum - 0.5);
  return r;
}

namespace {

// The rotation of [A, B] or [B, A] equal to `core`, as core = v^-1 base v.
std::optional<Word> rotation_of_commutator(const Word& core) {
  for (const char* base : {"ABab", "BAba"}) {
    const Word b = Word::parse(base);
    Word v;
    for (std::size_t i = 0; i < 4; ++i) {
      if (v.inverse() * b * v == core) return v;
      v.push_back(b.letters()[i]);
    }
  }
  return std::nullopt;
}

// X = c W c^-1 with c in G conjugating [W, V] to a power of P.
MobiusMap normalized_slope_map(const PuncturedTorusGroup& g, const ChristoffelPair& pair) {
  const CyclicDecomposition dec = cyclically_reduce(commutator(pair.word, pair.partner));
  const auto v = rotation_of_commutator(dec.core);
  if (!v) throw InvariantViolation("[W, V] for W = " + pair.word.to_string() + " is not conjugate to [A, B]^+-1");
  const Word y = *v * dec.conjugator.inverse() * pair.word * dec.conjugator * v->inverse();
  const MobiusMap& c0 = g.commutator_conjugator();
  return c0.inverse() * g.evaluate(y) * c0;
}

bool same_trace(const Scalar& s, const Scalar& t) {
  if (s.is_exact() && t.is_exact()) return s == t;
  return std::abs(s.to_double() - t.to_double()) <= 1e-9 * std::abs(t.to_double());
}

BoundaryPoint shifted(const BoundaryPoint& p, const Integer& n) { return p + Rational(-n); }

}  // namespace

CoverageReport gap_measure(const PuncturedTorusGroup& g, int depth, int radius, unsigned threads) {
  if (depth < 0) throw DomainError("depth must be non-negative");
  const std::vector<SlopeNode> nodes = slope_tree(g, depth);
  const double match_tol = g.is_exact() ? 0.0 : 1e-9;

  std::vector<std::vector<CoverageEntry>> per_slope(nodes.size());
  parallel_for(nodes.size(), threads, [&](std::size_t i) {
    const SlopeNode& node = nodes[i];
    const MobiusMap x = normalized_slope_map(g, christoffel_pair(node.slope));
    const FixedPoints fp = x.fixed_points();
    for (int o = 0; o < 2; ++o) {
      const MobiusMap m = o == 0 ? x : x.inverse();
      const BoundaryPoint c = m.apply(BoundaryPoint::infinity());
      if (c.is_infinite()) throw InvariantViolation("slope map for " + node.slope.to_string() + " fixes oo");
      Deadzone dz = deadzone_of(g, c, radius, m);
      const bool ends_on_axis = same_point(dz.left, fp.attracting, match_tol) ||
                                same_point(dz.left, *fp.repelling, match_tol) ||
                                same_point(dz.right, fp.attracting, match_tol) ||
                                same_point(dz.right, *fp.repelling, match_tol);
      if (!ends_on_axis)
        throw InvariantViolation("deadzone at " + c.to_string() + " does not end on the axis of slope " +
                                 node.slope.to_string());
      if (!same_trace(dz.trace(), abs(node.trace)))
        throw InvariantViolation("side map trace differs from the slope trace at " + node.slope.to_string());
      Integer n;
      BoundaryPoint center = reduce_mod1(c, &n);
      BoundaryPoint left = shifted(dz.left, n);
      BoundaryPoint right = shifted(dz.right, n);
      per_slope[i].push_back({node.slope, o, std::move(dz), std::move(center), std::move(left), std::move(right)});
    }
  });

  CoverageReport r;
  r.depth = depth;
  r.radius = radius;
  std::vector<double> widths, terms;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    terms.push_back(term(nodes[i].trace));
    for (CoverageEntry& e : per_slope[i]) {
      widths.push_back(e.deadzone.width);
      r.deadzones.push_back(std::move(e));
    }
  }
  r.total_width = pairwise_sum(widths);
  r.identity_twice = 2 * pairwise_sum(terms);

  const double tol = g.is_exact() ? 0.0 : 1e-12;
  std::stable_sort(r.deadzones.begin(), r.deadzones.end(), [&](const CoverageEntry& a, const CoverageEntry& b) {
    return compare(a.center, b.center) < 0;
  });
  const std::size_t n = r.deadzones.size();
  std::string first;
  auto check = [&](const CoverageEntry& a, const BoundaryPoint& a_right, const CoverageEntry& b) {
    if (compare(a_right, b.left, tol) <= 0) return;
    if (r.overlaps++ == 0)
      first = "; first: slope " + a.slope.to_string() + " ends at " + a_right.to_string() + " after slope " +
              b.slope.to_string() + " starts at " + b.left.to_string();
  };
  for (std::size_t i = 0; i + 1 < n; ++i) check(r.deadzones[i], r.deadzones[i].right, r.deadzones[i + 1]);
  if (n > 1) check(r.deadzones[n - 1], shifted(r.deadzones[n - 1].right, 1), r.deadzones[0]);
  if (r.overlaps > 0)
    throw InvariantViolation(std::to_string(r.overlaps) + " overlapping deadzone pairs at depth " +
                             std::to_string(depth) + first);
  return r;
}

const char* to_string(ScanVerdict v) {
  switch (v) {
    case ScanVerdict::NonSimple: return "nonsimple";
    case ScanVerdict::NoCrossing: return "no_crossing";
    case ScanVerdict::CuspCenter: return "cusp_center";
  }
  return "?";
}

std::vector<ScanPoint> scan_simplicity(const PuncturedTorusGroup& g, const Scalar& step, int radius,
                                       const std::vector<CoverageEntry>& deadzones, unsigned threads) {
  if (!(step > Scalar(0)) || !(step <= Scalar(1))) throw DomainError("scan resolution must lie in (0, 1]");
  std::vector<BoundaryPoint> grid;
  for (Scalar x(0); x < Scalar(1); x += step) grid.emplace_back(x);
  const double tol = grid.front().is_exact() && g.is_exact() ? 0.0 : 1e-12;

  std::vector<ScanPoint> out(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t i) {
    const BoundaryPoint& x = grid[i];
    ScanPoint p{x, ScanVerdict::NoCrossing, 0, -1};
    for (std::size_t k = 0; k < deadzones.size(); ++k) {
      const CoverageEntry& e = deadzones[k];
      for (int shift : {-1, 0, 1}) {
        const BoundaryPoint y = x + Rational(shift);
        if (compare(e.left, y, tol) < 0 && compare(y, e.right, tol) < 0) p.deadzone_id = static_cast<int>(k);
      }
      if (same_point(e.center, x, tol)) p.verdict = ScanVerdict::CuspCenter;
    }
    if (p.verdict != ScanVerdict::CuspCenter) {
      const SimplicityVerdict v = is_simple_ball(g, vertical_lift(x), radius);
      if (v.non_simple()) {
        p.verdict = ScanVerdict::NonSimple;
        p.witness_length = static_cast<int>(v.witness->size());
      }
    }
    out[i] = std::move(p);
  });
  return out;
}

ScanCounts count_verdicts(const std::vector<ScanPoint>& points) {
  ScanCounts c;
  for (const ScanPoint& p : points) {
    switch (p.verdict) {
      case ScanVerdict::NonSimple: ++c.non_simple; break;
      case ScanVerdict::NoCrossing: ++c.no_crossing; break;
      case ScanVerdict::CuspCenter: ++c.cusp_center; break;
    }
  }
  return c;
}

}  // namespace mcshane
