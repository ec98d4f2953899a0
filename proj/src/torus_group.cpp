#include "mcshane/torus_group.hpp"

#include "mcshane/ball.hpp"

#include <cmath>

namespace mcshane {

PuncturedTorusGroup::PuncturedTorusGroup(MobiusMap a, MobiusMap b, MobiusMap commutator_conjugator,
                                         int commutator_sign, std::string name)
    : gens_{a, a.inverse(), b, b.inverse()},
      p_(MobiusMap::translation(1)),
      comm_conj_(std::move(commutator_conjugator)),
      comm_sign_(commutator_sign),
      x_(abs(a.trace())),
      y_(abs(b.trace())),
      z_(abs((a * b).trace())),
      exact_(a.is_exact() && b.is_exact()),
      name_(std::move(name)) {
  for (int k = 0; k < 4; ++k) approx_[k] = gens_[k].approx();
}

MobiusMap PuncturedTorusGroup::evaluate(const Word& w) const {
  MobiusMap m;
  for (Letter l : w.letters()) m = m * generator(l);
  return m;
}

Mat2d PuncturedTorusGroup::evaluate_approx(const Word& w) const {
  Mat2d m;
  for (Letter l : w.letters()) m = m * generator_approx(l);
  return m;
}

namespace {

Integer mod6(const Integer& k) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), k.get_mpz_t(), 6);
  return r;
}

// [[a, b/6], [6c, d]]
MobiusMap rescale(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
  return MobiusMap(Scalar(Rational(a)), Scalar(make_rational(b, 6)), Scalar(Rational(Integer(6 * c))),
                   Scalar(Rational(d)));
}

MobiusMap modular_cusp_solver(const Rational& x) {
  const Rational y = 6 * x;
  const Integer p = y.get_num();
  const Integer q = y.get_den();
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  Integer r = -t;
  // p s - r q = 1 with 0 <= s < q
  Integer k;
  mpz_fdiv_q(k.get_mpz_t(), s.get_mpz_t(), q.get_mpz_t());
  s -= k * q;
  r -= k * p;
  const Integer shift = mod6(Integer(-modular_class(p, r, q, s)));
  return rescale(p, p * shift + r, q, q * shift + s);
}

}  // namespace

int modular_class(const Integer& a0, const Integer& b0, const Integer& c0, const Integer& d0) {
  if (a0 * d0 - b0 * c0 != 1) throw DomainError("modular_class needs an SL(2,Z) matrix");
  Integer a = a0, b = b0, c = c0, d = d0;
  Integer k = 0;
  while (c != 0) {
    // M = T^q S M'
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    a -= q * c;
    b -= q * d;
    k += q + 3;
    Integer na = c, nb = d, nc = -a, nd = -b;
    a = na;
    b = nb;
    c = nc;
    d = nd;
  }
  // a = d = +-1, M = +-T^(b a)
  k += b * a;
  return static_cast<int>(mod6(k).get_si());
}

bool modular_torus_contains(const MobiusMap& m) {
  if (!m.is_exact()) throw DomainError("membership test needs exact entries");
  const Rational a = m.a().rational();
  const Rational b = m.b().rational() * 6;
  const Rational c = m.c().rational() / 6;
  const Rational d = m.d().rational();
  for (const Rational* e : {&a, &b, &c, &d})
    if (e->get_den() != 1) return false;
  return modular_class(a.get_num(), b.get_num(), c.get_num(), d.get_num()) == 0;
}

PuncturedTorusGroup modular_torus() {
  const MobiusMap a = rescale(1, 1, 1, 2);
  const MobiusMap b = rescale(1, -1, -1, 2);
  const MobiusMap k = a * b * a.inverse() * b.inverse();
  // [A, B] is parabolic at 0
  const MobiusMap h = modular_cusp_solver(Rational(0));
  const MobiusMap at_inf = h.inverse() * k * h;
  int sign = 0;
  if (at_inf == MobiusMap::translation(1)) sign = 1;
  if (at_inf == MobiusMap::translation(-1)) sign = -1;
  if (sign == 0) throw InvariantViolation("modular torus commutator is not conjugate to P^(+-1)");
  PuncturedTorusGroup g(a, b, h, sign, "modular");
  g.modular_ = true;
  return g;
}

PuncturedTorusGroup from_traces(const Scalar& xs, const Scalar& ys, const Scalar& zs) {
  const double x = xs.to_double();
  const double y = ys.to_double();
  const double z = zs.to_double();
  if (!(x > 2 && y > 2 && z > 2)) throw DomainError("Fricke traces must all exceed 2");
  const double residual = x * x + y * y + z * z - x * y * z;
  if (std::abs(residual) > 1e-9 * x * y * z)
    throw DomainError("traces violate x^2 + y^2 + z^2 = xyz (residual " + std::to_string(residual) + ")");

  const double bb = (-z - std::sqrt(z * z - 4)) / 2;
  const MobiusMap a0 = MobiusMap::unchecked(Scalar(x), Scalar(1.0), Scalar(-1.0), Scalar(0.0));
  const MobiusMap b0 = MobiusMap::unchecked(Scalar(0.0), Scalar(bb), Scalar(-1 / bb), Scalar(y));
  const MobiusMap k = a0 * b0 * a0.inverse() * b0.inverse();

  // send the parabolic fixed point of [A, B] to oo, then scale the translation to +-1
  MobiusMap c1;
  if (std::abs(k.c().to_double()) > 1e-14 * k.approx().scale()) {
    const double q = (k.a().to_double() - k.d().to_double()) / (2 * k.c().to_double());
    c1 = MobiusMap::unchecked(Scalar(0.0), Scalar(-1.0), Scalar(1.0), Scalar(-q));
  }
  const Mat2d k1 = conjugate(c1, k).approx();
  const double t = k1.b / k1.a;
  const double s = std::sqrt(std::abs(t));
  const MobiusMap scale = MobiusMap::unchecked(Scalar(1 / s), Scalar(0.0), Scalar(0.0), Scalar(s));
  const MobiusMap cc = scale * c1;
  return PuncturedTorusGroup(conjugate(cc, a0), conjugate(cc, b0), MobiusMap(), t > 0 ? 1 : -1,
                             "fricke(" + xs.to_string() + "," + ys.to_string() + "," + zs.to_string() + ")");
}

namespace {

// First ball element g (shortlex) with g(oo) = p + n for an integer n; the
// returned map is P^-n g.
std::optional<MobiusMap> search_cusp(const PuncturedTorusGroup& g, double p, int radius) {
  std::optional<MobiusMap> found;
  for_each_in_ball(g, radius, [&](const Word& w, const Mat2d& m) {
    if (std::abs(m.c) <= 1e-12 * m.scale()) return true;
    const double v = m.a / m.c;
    const double n = std::round(v - p);
    if (std::abs(v - n - p) <= 1e-9 * (1 + std::abs(p))) {
      found = MobiusMap::translation(Scalar(-n)) * g.evaluate(w);
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace

MobiusMap cusp_solver(const PuncturedTorusGroup& g, const BoundaryPoint& x, int radius) {
  if (x.is_infinite()) return MobiusMap::identity();
  if (g.is_modular()) {
    if (x.is_rational()) return modular_cusp_solver(x.rational());
    throw DomainError("point " + x.to_string() + " is not a cusp lift of the modular torus");
  }
  if (auto h = search_cusp(g, x.to_double(), radius)) return *h;
  throw DomainError("point " + x.to_string() + " not recognized as a cusp lift within radius " +
                    std::to_string(radius));
}

bool is_cusp_lift(const PuncturedTorusGroup& g, const BoundaryPoint& p, int radius) {
  if (p.is_infinite()) return true;
  if (g.is_modular() && p.is_exact()) return p.is_rational();
  return search_cusp(g, p.to_double(), radius).has_value();
}

}  // namespace mcshane
