#pragma once

#include <array>
#include <string>
#include <vector>

#include "mysticum/binary_form.hpp"
#include "mysticum/errors.hpp"

namespace mysticum {

class IndeterminateCrossRatio : public domain_error {
 public:
  IndeterminateCrossRatio() : domain_error("cross_ratio: 0/0 coincidence pattern") {}
};

class SingularMatrixError : public domain_error {
 public:
  SingularMatrixError() : domain_error("apply_flt: singular matrix") {}
};

// Point [u : v] of the projective line over a field K, stored in canonical
// form: v = 1, or u = 1 when v = 0 (the point at infinity). Equality on
// canonical representatives is exact equality.
template <class K>
class P1Point {
 public:
  P1Point() : u_(0), v_(1) {}
  P1Point(K affine) : u_(std::move(affine)), v_(1) {}  // NOLINT: implicit by design
  P1Point(K u, K v) : u_(std::move(u)), v_(std::move(v)) {
    require(!(is_zero(u_) && is_zero(v_)), "P1Point: [0 : 0] is not a point");
    normalize();
  }

  static P1Point infinity() {
    P1Point p;
    p.u_ = K(1);
    p.v_ = K(0);
    return p;
  }

  const K& u() const { return u_; }
  const K& v() const { return v_; }
  bool is_infinity() const { return is_zero(v_); }
  const K& affine() const {
    require(!is_infinity(), "P1Point: affine value of infinity");
    return u_;
  }

  friend bool operator==(const P1Point& a, const P1Point& b) {
    return a.u_ == b.u_ && a.v_ == b.v_;
  }
  friend bool operator!=(const P1Point& a, const P1Point& b) { return !(a == b); }

 private:
  void normalize() {
    if (!is_zero(v_)) {
      u_ = u_ / v_;
      v_ = K(1);
    } else {
      u_ = K(1);
    }
  }
  K u_, v_;
};

// u1 v2 - u2 v1; zero exactly when the points coincide.
template <class K>
K p1_det(const P1Point<K>& a, const P1Point<K>& b) {
  return a.u() * b.v() - b.u() * a.v();
}

// Cross-ratio of four ordered points as a projective value
// [d13 d24 : d14 d23]; matches the affine formula
// (z1-z3)(z2-z4) / ((z1-z4)(z2-z3)) with the usual limits at infinity.
template <class K>
P1Point<K> cross_ratio(const P1Point<K>& z1, const P1Point<K>& z2, const P1Point<K>& z3,
                       const P1Point<K>& z4) {
  K num = p1_det(z1, z3) * p1_det(z2, z4);
  K den = p1_det(z1, z4) * p1_det(z2, z3);
  if (is_zero(num) && is_zero(den)) throw IndeterminateCrossRatio();
  return P1Point<K>(std::move(num), std::move(den));
}

// Invertible fractional linear transformation [u:v] -> [a u + b v : c u + d v].
template <class K>
struct Mobius {
  K a, b, c, d;

  Mobius(K a_, K b_, K c_, K d_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (is_zero(det())) throw SingularMatrixError();
  }

  K det() const { return a * d - b * c; }

  static Mobius identity() { return Mobius(K(1), K(0), K(0), K(1)); }

  // The unique transformation taking (z1, z2, z3) to (0, 1, infinity).
  static Mobius to_standard_frame(const P1Point<K>& z1, const P1Point<K>& z2,
                                  const P1Point<K>& z3) {
    // row (v, -u) kills [u : v]
    K r1a = z1.v(), r1b = -z1.u();
    K r2a = z3.v(), r2b = -z3.u();
    K s = r1a * z2.u() + r1b * z2.v();
    K t = r2a * z2.u() + r2b * z2.v();
    if (is_zero(s) || is_zero(t))
      throw domain_error("Mobius: coincident anchor points");
    return Mobius(r1a * t, r1b * t, r2a * s, r2b * s);
  }

  Mobius inverse() const { return Mobius(d, -b, -c, a); }

  Mobius compose(const Mobius& o) const {  // first o, then *this
    return Mobius(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d);
  }
};

template <class K>
P1Point<K> apply_flt(const Mobius<K>& m, const P1Point<K>& z) {
  return P1Point<K>(m.a * z.u() + m.b * z.v(), m.c * z.u() + m.d * z.v());
}

}  // namespace mysticum
