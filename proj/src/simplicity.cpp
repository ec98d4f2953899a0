#include "mcshane/simplicity.hpp"

#include "mcshane/ball.hpp"

#include <cmath>

namespace mcshane {

namespace {

// Relative margin of the binary64 filter. Ball words stay below length ~16,
// where accumulated rounding in matrix entries is far below this.
constexpr double kMargin = 1e-7;

int sign(double v) { return (v > 0) - (v < 0); }

}  // namespace

CrossingTest::CrossingTest(const PuncturedTorusGroup& g, const Geodesic& gamma)
    : g_(g), gamma_(gamma), vertical_(gamma.is_vertical()) {
  if (vertical_) {
    x_ = (gamma.start().is_infinite() ? gamma.end() : gamma.start()).to_double();
  } else {
    lo_ = std::min(gamma.start().to_double(), gamma.end().to_double());
    hi_ = std::max(gamma.start().to_double(), gamma.end().to_double());
  }
}

int CrossingTest::filter(const Mat2d& m) const {
  const double s = m.scale();
  if (std::abs(m.c) <= kMargin * s) return 0;
  if (vertical_) {
    const double x = x_;
    const double den = m.c * x + m.d;
    if (std::abs(den) <= kMargin * (std::abs(m.c * x) + std::abs(m.d))) return 0;
    const double q = m.c * x * x + (m.d - m.a) * x - m.b;
    if (std::abs(q) <= kMargin * (std::abs(m.c) * x * x + (std::abs(m.a) + std::abs(m.d)) * std::abs(x) +
                                  std::abs(m.b)))
      return 0;
    const double u = m.a - m.c * x;
    if (std::abs(u) <= kMargin * (std::abs(m.a) + std::abs(m.c * x))) return 0;
    // sign(g(oo) - x) = sign(u c), sign(g(x) - x) = -sign(q) sign(den)
    return sign(u) * sign(m.c) * -sign(q) * sign(den) < 0 ? 1 : -1;
  }
  bool inside[2];
  const double ends[2] = {lo_, hi_};
  for (int k = 0; k < 2; ++k) {
    const double e = ends[k];
    const double den = m.c * e + m.d;
    if (std::abs(den) <= kMargin * (std::abs(m.c * e) + std::abs(m.d))) return 0;
    const double y = (m.a * e + m.b) / den;
    const double tol = kMargin * (1 + std::abs(y) + std::abs(lo_) + std::abs(hi_));
    if (std::abs(y - lo_) <= tol || std::abs(y - hi_) <= tol) return 0;
    inside[k] = lo_ < y && y < hi_;
  }
  return inside[0] != inside[1] ? 1 : -1;
}

bool CrossingTest::exact(const MobiusMap& m) const {
  return crosses(gamma_, gamma_.image(m), g_.is_exact() && gamma_.is_exact() ? 0.0 : 1e-12);
}

bool CrossingTest::operator()(const Word& w, const Mat2d& m) const {
  const int f = filter(m);
  if (f != 0) return f > 0;
  return exact(g_.evaluate(w));
}

SimplicityVerdict is_simple_ball(const PuncturedTorusGroup& g, const Geodesic& gamma, int radius) {
  const CrossingTest test(g, gamma);
  SimplicityVerdict out;
  out.radius = radius;
  for_each_in_ball(g, radius, [&](const Word& w, const Mat2d& m) {
    if (!test(w, m)) return true;
    out.witness = w;
    return false;
  });
  if (out.witness) out.crossing_point = intersection_point(gamma, gamma.image(g.evaluate(*out.witness)));
  return out;
}

}  // namespace mcshane
