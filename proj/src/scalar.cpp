#include "mcshane/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace mcshane {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

Integer floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

double to_double(const Rational& q) {
  if (q == 0) return 0.0;
  long ne = 0, de = 0;
  const double nm = mpz_get_d_2exp(&ne, q.get_num_mpz_t());
  const double dm = mpz_get_d_2exp(&de, q.get_den_mpz_t());
  const long e = ne - de;
  if (e > std::numeric_limits<double>::max_exponent + 2)
    return nm > 0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
  if (e < std::numeric_limits<double>::min_exponent - 60) return 0.0;
  // Short mantissas lose low bits; fall back to the library conversion when
  // the value is comfortably within range.
  if (std::abs(e) < 900) return q.get_d();
  return std::ldexp(nm / dm, static_cast<int>(e));
}

Integer parse_integer(const std::string& s) {
  if (s.empty()) throw DomainError("empty integer");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw DomainError("malformed integer '" + s + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') throw DomainError("malformed integer '" + s + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw DomainError("malformed rational '" + text + "': zero denominator");
  return make_rational(num, den);
}

Scalar parse_scalar(const std::string& text, bool allow_decimal) {
  const bool decimal = text.find_first_of(".eE") != std::string::npos;
  if (!decimal) return Scalar(parse_rational(text));
  if (!allow_decimal) throw DomainError("decimal not accepted here: '" + text + "'");
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw DomainError("malformed number '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v)) throw DomainError("malformed number '" + text + "'");
  return Scalar(v);
}

const Rational& Scalar::rational() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return *q;
  throw DomainError("scalar is not exact");
}

double Scalar::to_double() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return mcshane::to_double(*q);
  return std::get<double>(value_);
}

int Scalar::sign() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return sgn(*q);
  const double d = std::get<double>(value_);
  return (d > 0) - (d < 0);
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return Scalar(Rational(-*q));
  return Scalar(-std::get<double>(value_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    std::get<Rational>(value_) += o.rational();
  } else {
    value_ = to_double() + o.to_double();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    std::get<Rational>(value_) -= o.rational();
  } else {
    value_ = to_double() - o.to_double();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    std::get<Rational>(value_) *= o.rational();
  } else {
    value_ = to_double() * o.to_double();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  if (is_exact() && o.is_exact()) {
    std::get<Rational>(value_) /= o.rational();
  } else {
    value_ = to_double() / o.to_double();
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.rational() == b.rational();
  return a.to_double() == b.to_double();
}

std::partial_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) {
    const int c = cmp(a.rational(), b.rational());
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  return a.to_double() <=> b.to_double();
}

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return q->get_str();
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(value_));
  return buf;
}

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

}  // namespace mcshane
