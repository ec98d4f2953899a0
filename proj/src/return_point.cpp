#include "mcshane/return_point.hpp"

#include "mcshane/ball.hpp"
#include "mcshane/geodesic.hpp"
#include "mcshane/simplicity.hpp"

#include <cmath>
#include <optional>
#include <vector>

namespace mcshane {

namespace {

constexpr double kSlack = 1e-6;

struct Candidate {
  double height_sq;
  Word word;
};

std::optional<ReturnPoint> scan(const PuncturedTorusGroup& g, const BoundaryPoint& x, int radius) {
  const CrossingTest crossing(g, vertical_lift(x));
  const double xd = x.to_double();
  double best = -1;
  std::vector<Candidate> candidates;
  auto prune = [&] {
    std::erase_if(candidates, [&](const Candidate& c) { return c.height_sq < best * (1 - kSlack); });
  };

  for_each_in_ball(g, radius, [&](const Word& w, const Mat2d& m) {
    if (!crossing(w, m)) return true;
    const double ginf = m.a / m.c;
    const double gx = (m.a * xd + m.b) / (m.c * xd + m.d);
    const double h2 = (xd - ginf) * (gx - xd);
    // Im g^-1(p) = Im p / |c' p + d'|^2 with g^-1 = [[d, -b], [-c, a]]
    const double u = m.a - m.c * xd;
    const double lift = u * u + m.c * m.c * h2;
    if (lift > 1 + kSlack || h2 < best * (1 - kSlack)) return true;
    candidates.push_back({h2, w});
    if (lift < 1 - kSlack && h2 > best) best = h2;
    if (candidates.size() > 4096) prune();
    return true;
  });
  prune();

  std::optional<ReturnPoint> out;
  const Scalar xs = x.scalar();
  for (const Candidate& c : candidates) {
    const MobiusMap m = g.evaluate(c.word);
    const Scalar ginf = m.apply(BoundaryPoint::infinity()).scalar();
    const Scalar gx = m.apply(x).scalar();
    const Scalar h2 = (xs - ginf) * (gx - xs);
    const Scalar u = m.a() - m.c() * xs;
    if (!(u * u + m.c() * m.c() * h2 < Scalar(1))) continue;
    if (out && !(h2 > out->point.im_sq) && !(h2 == out->point.im_sq && c.word < out->word)) continue;
    out = ReturnPoint{c.word, m, InteriorPoint{xs, h2}, false, radius};
  }
  return out;
}

}  // namespace

ReturnPoint highest_point_of_return(const PuncturedTorusGroup& g, const BoundaryPoint& x, int radius,
                                    bool check_stability) {
  if (!x.is_finite()) throw DomainError("return points need a finite x");
  if (g.is_exact() && !x.is_rational()) throw DomainError("return points on an exact group need a rational x");
  auto rp = scan(g, x, radius);
  if (!rp) throw DomainError("no point of return within radius " + std::to_string(radius));
  if (check_stability) {
    const auto wider = scan(g, x, radius + 2);
    rp->stable = wider && wider->word == rp->word && wider->point.im_sq == rp->point.im_sq;
  }
  return *rp;
}

BoundaryPoint simple_center_from(const PuncturedTorusGroup& g, const BoundaryPoint& x, int radius) {
  const ReturnPoint rp = highest_point_of_return(g, x, radius, false);
  const BoundaryPoint c = rp.map.apply(BoundaryPoint::infinity());
  if (c.is_infinite()) throw InvariantViolation("return witness " + rp.word.to_string() + " fixes oo");
  if (is_simple_ball(g, vertical_lift(c), radius).non_simple())
    throw InvariantViolation("g(oo) = " + c.to_string() + " is not simple at radius " + std::to_string(radius));
  if (!is_cusp_lift(g, c)) throw InvariantViolation("g(oo) = " + c.to_string() + " is not a cusp lift");
  return c;
}

}  // namespace mcshane
