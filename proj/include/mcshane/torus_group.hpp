#pragma once

#include "mcshane/boundary.hpp"
#include "mcshane/mobius.hpp"
#include "mcshane/word.hpp"

#include <array>
#include <optional>
#include <string>

namespace mcshane {

/// Fuchsian group of a once-punctured torus, free on A and B, normalized so
/// that the stabilizer of oo is generated by P: z -> z + 1.
class PuncturedTorusGroup {
 public:
  PuncturedTorusGroup(MobiusMap a, MobiusMap b, MobiusMap commutator_conjugator, int commutator_sign,
                      std::string name);

  const MobiusMap& A() const { return gens_[0]; }
  const MobiusMap& B() const { return gens_[2]; }
  const MobiusMap& P() const { return p_; }
  const MobiusMap& generator(Letter l) const { return gens_[static_cast<int>(l)]; }
  const Mat2d& generator_approx(Letter l) const { return approx_[static_cast<int>(l)]; }

  /// Trace coordinates (tr A, tr B, tr AB).
  const Scalar& x() const { return x_; }
  const Scalar& y() const { return y_; }
  const Scalar& z() const { return z_; }

  /// True when every generator has exact rational entries.
  bool is_exact() const { return exact_; }
  /// True for the modular torus, which has an exact membership test.
  bool is_modular() const { return modular_; }
  const std::string& name() const { return name_; }

  /// [A, B] = C P^s C^-1 with C = commutator_conjugator(), s = commutator_sign().
  const MobiusMap& commutator_conjugator() const { return comm_conj_; }
  int commutator_sign() const { return comm_sign_; }

  MobiusMap evaluate(const Word& w) const;
  Mat2d evaluate_approx(const Word& w) const;

 private:
  friend PuncturedTorusGroup modular_torus();
  std::array<MobiusMap, 4> gens_;
  std::array<Mat2d, 4> approx_;
  MobiusMap p_;
  MobiusMap comm_conj_;
  int comm_sign_;
  Scalar x_, y_, z_;
  bool exact_;
  bool modular_ = false;
  std::string name_;
};

/// Commutator subgroup of PSL(2, Z), conjugated by z -> z/6 so that its
/// width-6 cusp becomes z -> z + 1. Exact rational entries, traces (3, 3, 3).
PuncturedTorusGroup modular_torus();

/// Fricke construction from traces with x^2 + y^2 + z^2 = xyz, x, y, z > 2.
PuncturedTorusGroup from_traces(const Scalar& x, const Scalar& y, const Scalar& z);

/// Abelianization class in Z/6 of an SL(2, Z) matrix (T -> 1, S -> 3).
int modular_class(const Integer& a, const Integer& b, const Integer& c, const Integer& d);

/// Exact membership in the modular torus (rescaled coordinates).
bool modular_torus_contains(const MobiusMap& m);

/// Some h in G with h(oo) = x. The modular torus is solved exactly through a
/// Bezout matrix corrected to abelianization class 0; other groups search
/// the ball of radius `radius`. x = oo returns the identity.
MobiusMap cusp_solver(const PuncturedTorusGroup& g, const BoundaryPoint& x, int radius = 10);

/// Semi-decision: does some ball(radius) element times a power of P send oo
/// to p? Exact for the modular torus (cusp lifts are exactly Q u {oo}).
bool is_cusp_lift(const PuncturedTorusGroup& g, const BoundaryPoint& p, int radius = 10);

}  // namespace mcshane
