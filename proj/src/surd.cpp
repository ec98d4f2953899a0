#include "mcshane/surd.hpp"

#include <cmath>

namespace mcshane {

bool exact_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return false;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  root = make_rational(n, d);
  return true;
}

QuadraticSurd::QuadraticSurd(Rational u, Rational v, Rational d)
    : u_(std::move(u)), v_(std::move(v)), d_(std::move(d)) {
  if (sgn(d_) < 0) throw DomainError("surd radicand must be non-negative");
  Rational root;
  if (v_ != 0 && exact_sqrt(d_, root)) {
    u_ += v_ * root;
    v_ = 0;
    d_ = 1;
  }
  if (v_ == 0) {
    d_ = 1;
    return;
  }
  // integer radicand with small square factors pulled out
  const Integer den = d_.get_den();
  Integer n = d_.get_num() * den;
  v_ /= den;
  for (unsigned long p = 2; p < 1000; ++p) {
    const unsigned long sq = p * p;
    while (mpz_divisible_ui_p(n.get_mpz_t(), sq)) {
      n /= sq;
      v_ *= p;
    }
  }
  d_ = n;
}

namespace {

// sign of a + b*sqrt(d)
int sign_single(const Rational& a, const Rational& b, const Rational& d) {
  const int sa = sgn(a);
  const int sb = sgn(b) * (sgn(d) > 0 ? 1 : 0);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const int c = cmp(Rational(a * a), Rational(b * b * d));
  if (c > 0) return sa;
  if (c < 0) return sb;
  return 0;
}

}  // namespace

int sign_of(const Rational& a, const Rational& b, const Rational& d1, const Rational& c,
            const Rational& d2) {
  const int sx = sign_single(a, b, d1);
  const int sy = sgn(c) * (sgn(d2) > 0 ? 1 : 0);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  // |X| vs |Y| through X^2 - Y^2 = (a^2 + b^2 d1 - c^2 d2) + 2ab sqrt(d1)
  const int s = sign_single(Rational(a * a + b * b * d1 - c * c * d2), Rational(2 * a * b), d1);
  if (s > 0) return sx;
  if (s < 0) return sy;
  return 0;
}

int QuadraticSurd::sign() const { return sign_single(u_, v_, d_); }

double QuadraticSurd::to_double() const {
  if (v_ == 0) return mcshane::to_double(u_);
  const double root = std::sqrt(mcshane::to_double(d_));
  const double vr = mcshane::to_double(v_) * root;
  const double ud = mcshane::to_double(u_);
  if (sgn(u_) == 0 || (sgn(u_) > 0) == (sgn(v_) > 0)) return ud + vr;
  // cancellation: u + v r = (u^2 - v^2 d) / (u - v r)
  const Rational num = u_ * u_ - v_ * v_ * d_;
  return mcshane::to_double(num) / (ud - vr);
}

std::string QuadraticSurd::to_string() const {
  if (v_ == 0) return u_.get_str();
  return u_.get_str() + (sgn(v_) < 0 ? " - " : " + ") + Rational(abs(v_)).get_str() + "*sqrt(" +
         d_.get_str() + ")";
}

int compare(const QuadraticSurd& x, const QuadraticSurd& y) {
  return sign_of(Rational(x.u() - y.u()), x.v(), x.d(), Rational(-y.v()), y.d());
}

int compare(const QuadraticSurd& x, const Rational& q) {
  return sign_of(Rational(x.u() - q), x.v(), x.d(), Rational(0), Rational(1));
}

}  // namespace mcshane
