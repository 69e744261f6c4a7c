#pragma once

#include "mysticum/triinv.hpp"

namespace mysticum {

// The covariants of a binary sextic cut out the tri-involutive locus:
//   theta24 = (F,F)_4      degree 2, order 4
//   theta32 = (theta24,F)_4 degree 3, order 2
//   theta54 = (theta24,theta32)_1 degree 5, order 4
// and a sextuple is tri-involutive exactly when theta54 vanishes on its
// sextic. Works over any coefficient ring carrying rational scaling.
template <class R>
struct ThetaTriple {
  BinaryForm<R> theta24;
  BinaryForm<R> theta32;
  BinaryForm<R> theta54;
};

template <class R>
ThetaTriple<R> theta(const BinaryForm<R>& f) {
  if (f.degree() != 6) throw DegreeMismatchError("theta: sextic required");
  ThetaTriple<R> t{transvectant(f, f, 4), BinaryForm<R>(), BinaryForm<R>()};
  t.theta32 = transvectant(t.theta24, f, 4);
  t.theta54 = transvectant(t.theta24, t.theta32, 1);
  return t;
}

// Sextic with the given six roots: [u:v] contributes v x1 - u x2, so a
// point at infinity contributes x2.
template <class K>
BinaryForm<K> sextic_from_roots(const std::array<P1Point<K>, 6>& roots) {
  BinaryForm<K> f({K(1)});
  for (const auto& z : roots) f = f * BinaryForm<K>({z.v(), -z.u()});
  return f;
}

template <class K>
BinaryForm<K> sextic_from_roots(const Sextuple<K>& s) {
  return sextic_from_roots<K>(s.pts);
}

template <class K>
bool is_tri_involutive_covariant(const Sextuple<K>& s) {
  return theta(sextic_from_roots(s)).theta54.is_zero();
}

// Full symbolic verification over Q[a0..a6] of the two syzygies
// (theta54, F)_4 = 0 and (theta54, theta24)_4 = 0.
struct SyzygyReport {
  bool linear_syzygy_holds = false;     // (theta54, F)_4 = 0
  bool quadratic_syzygy_holds = false;  // (theta54, theta24)_4 = 0
  bool ok() const { return linear_syzygy_holds && quadratic_syzygy_holds; }
};

SyzygyReport verify_syzygies();

// theta24 and theta32 of the cleared tri-involutive family (p-1)p*Psi_p,
// computed exactly over Q[p].
struct PsiCovariantProfile {
  bool theta24_is_multiple_of_T2 = false;
  bool theta32_is_multiple_of_T = false;
  UniPoly<Rational> theta24_multiplier;  // theta24 = multiplier(p) * T^2
  UniPoly<Rational> theta32_multiplier;  // theta32 = multiplier(p) * T
  RatFunc<Rational> f1;                  // theta24(Psi_p) / T^2 as a rational function
  RatFunc<Rational> f2;                  // theta32(Psi_p) / T, recorded
  bool theta54_vanishes = false;         // identically in p
};

PsiCovariantProfile psi_covariant_profile();

// T = x1^2 - x1 x2 + x2^2, the line through the three involution centers.
template <class R>
BinaryForm<R> center_line_form() {
  return BinaryForm<R>({R(1), R(-1), R(1)});
}

}  // namespace mysticum
