#pragma once

#include "mcshane/boundary.hpp"
#include "mcshane/scalar.hpp"

#include <array>
#include <optional>
#include <string>

namespace mcshane {

/// Plain binary64 2x2 matrix used by the hot loops of ball scans.
struct Mat2d {
  double a = 1, b = 0, c = 0, d = 1;

  friend Mat2d operator*(const Mat2d& m, const Mat2d& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
            m.c * n.b + m.d * n.d};
  }
  double scale() const;
};

/// Point of the open upper half-plane. The imaginary part is stored squared
/// so that intersection heights of rational geodesics stay rational.
struct InteriorPoint {
  Scalar re;
  Scalar im_sq;

  static InteriorPoint from_re_im(const Scalar& re, const Scalar& im);
  double im() const;
  bool is_exact() const { return re.is_exact() && im_sq.is_exact(); }
};

enum class IsometryClass { Identity, Elliptic, Parabolic, Hyperbolic };

std::string to_string(IsometryClass c);

struct Classification {
  IsometryClass kind;
  Scalar trace;  // raw trace of the normalized representative
};

struct FixedPoints {
  BoundaryPoint attracting;  // the only point for parabolic maps
  std::optional<BoundaryPoint> repelling;
};

/// Orientation-preserving isometry z -> (az + b)/(cz + d) with ad - bc = 1,
/// stored in PSL(2) normal form: the first nonzero of (a, b, c, d) is positive.
class MobiusMap {
 public:
  /// Identity.
  MobiusMap();
  /// Validates the determinant: exactly 1 for exact entries, within 1e-12
  /// for binary64 entries.
  MobiusMap(Scalar a, Scalar b, Scalar c, Scalar d);

  static MobiusMap identity() { return {}; }
  static MobiusMap translation(const Scalar& t);
  /// Skips the determinant check (products of valid maps).
  static MobiusMap unchecked(Scalar a, Scalar b, Scalar c, Scalar d);

  const Scalar& a() const { return e_[0]; }
  const Scalar& b() const { return e_[1]; }
  const Scalar& c() const { return e_[2]; }
  const Scalar& d() const { return e_[3]; }

  bool is_exact() const;
  Scalar trace() const { return e_[0] + e_[3]; }
  Scalar determinant() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
  Mat2d approx() const;

  MobiusMap inverse() const;
  MobiusMap power(long k) const;

  BoundaryPoint apply(const BoundaryPoint& p) const;
  InteriorPoint apply(const InteriorPoint& z) const;

  Classification classify() const;
  FixedPoints fixed_points() const;
  /// 2 arccosh(|tr|/2); hyperbolic maps only.
  double translation_length() const;

  friend bool operator==(const MobiusMap& m, const MobiusMap& n);

  std::string to_string() const;

 private:
  struct Unchecked {};
  MobiusMap(Unchecked, Scalar a, Scalar b, Scalar c, Scalar d);
  void normalize();

  std::array<Scalar, 4> e_;
};

MobiusMap compose(const MobiusMap& m, const MobiusMap& n);
inline MobiusMap operator*(const MobiusMap& m, const MobiusMap& n) { return compose(m, n); }
/// c m c^-1
MobiusMap conjugate(const MobiusMap& c, const MobiusMap& m);

/// Entrywise projective comparison within tol (binary64 view).
bool approx_equal(const MobiusMap& m, const MobiusMap& n, double tol);

/// Tolerance band around |trace| = 2 used for binary64 classification.
inline constexpr double kParabolicBand = 1e-9;

}  // namespace mcshane
