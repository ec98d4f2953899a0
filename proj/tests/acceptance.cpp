#include "mcshane/deadzone.hpp"
#include "mcshane/geodesic.hpp"
#include "mcshane/identity.hpp"
#include "mcshane/return_point.hpp"
#include "mcshane/simplicity.hpp"
#include "mcshane/slope_tree.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

using namespace mcshane;

namespace {

const double kFrickeZ = 8 + std::sqrt(32.0);
int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("%s %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  failures += !ok;
}

// Runs a criterion; an exception is a failure with its message.
void criterion(int id, const std::function<std::pair<bool, std::string>()>& body) {
  try {
    const auto [ok, detail] = body();
    report(id, ok, detail);
  } catch (const std::exception& e) {
    report(id, false, std::string("exception: ") + e.what());
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

BoundaryPoint q(long p, long r = 1) { return BoundaryPoint(make_rational(p, r)); }

std::pair<bool, std::string> identity_check(const PuncturedTorusGroup& g) {
  SumOptions o;
  o.eps = 1e-12;
  o.threads = 1;
  const auto t0 = std::chrono::steady_clock::now();
  const IdentityReport r = mcshane_sum(g, o);
  const double t = seconds_since(t0);
  const double err = std::abs(r.sum - 0.5);
  return {err <= 1e-6 && t <= 10,
          fmt("%s identity, eps 1e-12: S = %.15f, |S - 1/2| = %.2e, %zu terms, %.3f s", g.name().c_str(), r.sum,
              err, r.terms, t)};
}

// Ten deadzones of the modular torus with centers in [0, 1) at depth <= 1.
std::vector<Deadzone> ten_deadzones(const PuncturedTorusGroup& g, int radius) {
  std::vector<Deadzone> out;
  for (const CoverageEntry& e : gap_measure(g, 1, 0).deadzones) {
    if (out.size() == 10) break;
    out.push_back(deadzone_of(g, e.center, radius));
  }
  return out;
}

struct IntMat {
  Integer a, b, c, d;
  IntMat operator*(const IntMat& n) const {
    return {a * n.a + b * n.c, a * n.b + b * n.d, c * n.a + d * n.c, c * n.b + d * n.d};
  }
};

IntMat unrescaled(Letter l) {
  switch (l) {
    case Letter::A: return {1, 1, 1, 2};
    case Letter::a: return {2, -1, -1, 1};
    case Letter::B: return {1, -1, -1, 2};
    case Letter::b: return {2, 1, 1, 1};
  }
  return {1, 0, 0, 1};
}

MobiusMap random_sl2z(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> k(-3, 3);
  std::uniform_int_distribution<int> len(1, 6);
  const MobiusMap s(Scalar(0), Scalar(-1), Scalar(1), Scalar(0));
  MobiusMap m;
  for (int i = len(rng); i > 0; --i) m = m * s * MobiusMap::translation(Scalar(k(rng)));
  return m;
}

}  // namespace

int main() {
  const PuncturedTorusGroup g = modular_torus();
  const PuncturedTorusGroup fricke = from_traces(Scalar(4), Scalar(4), Scalar(kFrickeZ));

  criterion(1, [&] { return identity_check(g); });
  criterion(2, [&] { return identity_check(fricke); });

  criterion(3, [&] {
    std::size_t n = 0;
    double worst = 0;
    for (const PuncturedTorusGroup* grp : {&g, &fricke})
      for (const CoverageEntry& e : gap_measure(*grp, 3, 0).deadzones) {
        worst = std::max(worst, std::abs(e.deadzone.gap_residual()));
        ++n;
      }
    return std::pair{n >= 20 && worst <= 1e-9,
                     fmt("gap formula on %zu deadzones (modular and Fricke, depth 3): max residual %.2e", n, worst)};
  });

  criterion(4, [&] {
    bool ok = true;
    double last = 0, w3 = 0, worst = 0;
    std::size_t overlaps = 0, count = 0;
    for (int d = 0; d <= 8; ++d) {
      const CoverageReport r = gap_measure(g, d, 0);
      SumOptions o;
      o.depth = d;
      const double twice = 2 * mcshane_sum(g, o).sum;
      worst = std::max(worst, std::abs(r.total_width - twice));
      overlaps += r.overlaps;
      ok = ok && r.total_width > last;
      last = r.total_width;
      if (d == 3) w3 = r.total_width;
      count = r.deadzones.size();
    }
    ok = ok && overlaps == 0 && w3 >= 0.99 && worst <= 1e-9;
    return std::pair{ok, fmt("coverage to depth 8 (%zu deadzones): %zu overlaps, W monotone, W(3) = %.9f, "
                             "W(8) = %.9f, max |W - 2S| = %.2e",
                             count, overlaps, w3, last, worst)};
  });

  criterion(5, [&] {
    std::size_t verified = 0, total = 0;
    for (const Deadzone& dz : ten_deadzones(g, 12))
      for (int i = 1; i <= 10; ++i) {
        ++total;
        const BoundaryPoint c(Rational(dz.left.to_double() + dz.width * i / 11.0));
        if (!dz.contains(c) || same_point(c, dz.center)) continue;
        const Geodesic lift = vertical_lift(c);
        const SimplicityVerdict v = is_simple_ball(g, lift, 12);
        if (v.non_simple() && CrossingTest(g, lift).exact(g.evaluate(*v.witness)) &&
            crosses(lift, lift.image(g.evaluate(*v.witness))))
          ++verified;
      }
    return std::pair{total == 100 && verified == 100,
                     fmt("%zu of %zu interior points NonSimple at N = 12 with exact witnesses", verified, total)};
  });

  criterion(6, [&] {
    std::size_t good = 0, total = 0;
    for (const Deadzone& dz : ten_deadzones(g, 12)) {
      ++total;
      good += verify_endpoints(g, dz, 12).ok();
    }
    return std::pair{total == 10 && good == 10,
                     fmt("%zu of %zu deadzones: both endpoints simple at N = 12 and not cusp lifts", good, total)};
  });

  criterion(7, [&] {
    std::size_t tested = 0, good = 0;
    for (long den = 2; tested < 20; ++den)
      for (long num = 1; num < den && tested < 20; ++num) {
        if (std::gcd(num, den) != 1) continue;
        const BoundaryPoint x = q(num, den);
        if (!is_simple_ball(g, vertical_lift(x), 12).non_simple()) continue;
        ++tested;
        const BoundaryPoint c = simple_center_from(g, x, 12);
        const bool simple = !is_simple_ball(g, vertical_lift(c), 12).non_simple();
        good += simple && deadzone_of(g, c, 12).contains(x);
      }
    return std::pair{good == 20,
                     fmt("%zu of %zu non-simple rationals: center simple at N = 12 and its deadzone contains x", good,
                         tested)};
  });

  criterion(8, [&] {
    const CoverageReport cov = gap_measure(g, 8, 0);
    std::vector<const CoverageEntry*> widest;
    for (const CoverageEntry& e : cov.deadzones)
      if (e.right.to_double() < 0.99) widest.push_back(&e);
    std::stable_sort(widest.begin(), widest.end(),
                     [](const CoverageEntry* a, const CoverageEntry* b) { return a->deadzone.width > b->deadzone.width; });
    // one deadzone for each of the five smallest traces
    std::vector<const CoverageEntry*> picked;
    for (const CoverageEntry* e : widest)
      if (picked.size() < 5 && (picked.empty() || !(e->deadzone.trace() == picked.back()->deadzone.trace())))
        picked.push_back(e);
    widest = picked;
    std::size_t good = 0;
    std::ostringstream gaps;
    for (const CoverageEntry* e : widest) {
      const QuadraticSurd r = e->right.as_surd();
      double best = 1;
      for (const CoverageEntry& other : cov.deadzones)
        if (compare(other.center, e->right) > 0) {
          const QuadraticSurd gap(other.center.rational() - r.u(), -r.v(), r.d());
          best = std::min(best, gap.to_double());
        }
      good += best < 1e-3;
      gaps << ' ' << e->deadzone.trace().to_string() << ':' << best;
    }
    return std::pair{good == 5, fmt("%zu of 5 right endpoints have a depth-8 center in (r, r + 1e-3); trace:distance%s",
                                    good, gaps.str().c_str())};
  });

  criterion(9, [&] {
    std::size_t equal = 0, total = 0;
    for (const SlopeNode& n : slope_tree(g, 10)) {
      const Word w = christoffel_word(n.slope);
      IntMat m{1, 0, 0, 1};
      for (Letter l : w.letters()) m = m * unrescaled(l);
      ++total;
      equal += n.trace == Scalar(Rational(m.a + m.d));
    }
    return std::pair{equal == total && total == 3 * 1024,
                     fmt("Christoffel trace equals Vieta trace for %zu of %zu slopes to depth 10", equal, total)};
  });

  criterion(10, [&] {
    std::mt19937_64 rng(10);
    std::size_t conj = 0;
    for (int i = 0; i < 1000; ++i) {
      const MobiusMap m = random_sl2z(rng);
      const MobiusMap c = random_sl2z(rng);
      const Classification a = m.classify(), b = conjugate(c, m).classify();
      conj += a.kind == b.kind && abs(a.trace) == abs(b.trace);
    }
    std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
    std::size_t cross = 0;
    for (int i = 0; i < 1000;) {
      BoundaryPoint e[4];
      for (auto& p : e) p = q(num(rng), den(rng));
      bool distinct = true;
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) distinct = distinct && !same_point(e[a], e[b]);
      if (!distinct) continue;
      ++i;
      const Geodesic g1(e[0], e[1]), g2(e[2], e[3]);
      const MobiusMap m = random_sl2z(rng);
      cross += crosses(g1, g2) == crosses(g1.image(m), g2.image(m));
    }
    std::size_t nodes = 0, markov = 0;
    std::function<void(const TreeEdge&)> descend = [&](const TreeEdge& e) {
      const SlopeNode n = e.node();
      ++nodes;
      markov += e.t1 * e.t1 + e.t2 * e.t2 + n.trace * n.trace == e.t1 * e.t2 * n.trace;
      if (n.depth < 10)
        for (const TreeEdge& c : e.children(n)) descend(c);
    };
    for (const TreeEdge& e : tree_root(g).edges) descend(e);
    return std::pair{conj == 1000 && cross == 1000 && markov == nodes,
                     fmt("conjugation invariance %zu/1000, crossing invariance %zu/1000, Markov relation %zu/%zu "
                         "nodes",
                         conj, cross, markov, nodes)};
  });

  std::printf("%d failed\n", failures);
  return failures == 0 ? 0 : 1;
}
