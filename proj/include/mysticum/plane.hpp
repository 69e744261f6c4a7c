#pragma once

#include <array>

#include "mysticum/p1.hpp"

namespace mysticum {

class DegenerateJoinError : public domain_error {
 public:
  DegenerateJoinError() : domain_error("join_or_meet: proportional operands or zero result") {}
};

class DegenerateTriangleError : public domain_error {
 public:
  DegenerateTriangleError() : domain_error("chasles_center: degenerate triangle") {}
};

// A nonzero quadratic form simultaneously represents a point of the plane
// and its polar line with respect to the conic; the role tag is metadata
// only and never affects comparisons.
enum class Role { point, line };

template <class K>
struct PlaneElement {
  BinaryForm<K> form;  // nonzero, degree 2
  Role role = Role::point;

  PlaneElement(BinaryForm<K> f, Role r) : form(std::move(f)), role(r) {
    require(form.degree() == 2, "PlaneElement: quadratic form required");
    if (form.is_zero()) throw ZeroFormError();
  }

  PlaneElement polar() const { return PlaneElement(form, role == Role::point ? Role::line : Role::point); }
};

template <class K>
bool same_element(const PlaneElement<K>& a, const PlaneElement<K>& b) {
  return proportional(a.form, b.form);
}

// Conic point: the square of the linear form with root z. z = [u:v]
// contributes (v x1 - u x2)^2, so infinity gives x2^2.
template <class K>
PlaneElement<K> conic_point(const P1Point<K>& z) {
  BinaryForm<K> lin({z.v(), -z.u()});
  return PlaneElement<K>(lin * lin, Role::point);
}

// First transvectant; joining line of two points, meeting point of two
// lines (self-dual under the conic polarity).
template <class K>
PlaneElement<K> join_or_meet(const PlaneElement<K>& a, const PlaneElement<K>& b) {
  BinaryForm<K> f = transvectant(a.form, b.form, 1);
  if (f.is_zero()) throw DegenerateJoinError();
  Role r = (a.role == Role::point && b.role == Role::point) ? Role::line : Role::point;
  return PlaneElement<K>(std::move(f), r);
}

// Conjugacy: the second transvectant vanishes. For a point and a line this
// is exactly incidence, so the two predicates share one implementation.
template <class K>
bool is_conjugate(const PlaneElement<K>& a, const PlaneElement<K>& b) {
  return transvectant(a.form, b.form, 2).is_zero();
}

template <class K>
bool incident(const PlaneElement<K>& point, const PlaneElement<K>& line) {
  return is_conjugate(point, line);
}

// Collinearity via the 3x3 coefficient determinant; robust when two of the
// elements coincide. The join-based route is kept as a test oracle.
template <class K>
bool collinear(const PlaneElement<K>& a, const PlaneElement<K>& b, const PlaneElement<K>& c) {
  const auto& x = a.form.coeffs();
  const auto& y = b.form.coeffs();
  const auto& z = c.form.coeffs();
  K det = x[0] * (y[1] * z[2] - y[2] * z[1]) - x[1] * (y[0] * z[2] - y[2] * z[0]) +
          x[2] * (y[0] * z[1] - y[1] * z[0]);
  return is_zero(det);
}

template <class K>
using Triangle = std::array<P1Point<K>, 3>;

template <class K>
PlaneElement<K> chord(const P1Point<K>& p, const P1Point<K>& q) {
  require(!(p == q), "chord: coincident endpoints");
  BinaryForm<K> lp({p.v(), -p.u()});
  BinaryForm<K> lq({q.v(), -q.u()});
  return PlaneElement<K>(lp * lq, Role::line);
}

// Chasles perspectivity center of a triangle inscribed in the conic and its
// polar triangle. The three lines P P', Q Q', R R' must concur (a classical
// theorem; failure on exact input is a bug), and the three side-meets land
// on the polar line of the center.
template <class K>
PlaneElement<K> chasles_center(const Triangle<K>& tri) {
  const auto& [P, Q, R] = tri;
  if (P == Q || P == R || Q == R) throw DegenerateTriangleError();
  PlaneElement<K> vertices[3] = {conic_point(P), conic_point(Q), conic_point(R)};
  PlaneElement<K> poles[3] = {chord(Q, R).polar(), chord(P, R).polar(), chord(P, Q).polar()};
  PlaneElement<K> l0 = join_or_meet(vertices[0], poles[0]);
  PlaneElement<K> l1 = join_or_meet(vertices[1], poles[1]);
  PlaneElement<K> l2 = join_or_meet(vertices[2], poles[2]);
  PlaneElement<K> center = join_or_meet(l0, l1);  // meet of two lines
  check_theorem(incident(center, l2), "chasles_center: perspectivity lines not concurrent");
  // side-meets lie on the polar of the center
  PlaneElement<K> axis = center.polar();
  const PlaneElement<K>* vs = vertices;
  const PlaneElement<K>* ps = poles;
  int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (auto& pr : pairs) {
    PlaneElement<K> side = join_or_meet(vs[pr[0]], vs[pr[1]]);
    PlaneElement<K> side_polar = join_or_meet(ps[pr[0]], ps[pr[1]]);
    if (!same_element(side, side_polar)) {
      PlaneElement<K> meet = join_or_meet(side, side_polar);
      check_theorem(incident(meet, axis), "chasles_center: axis incidence failed");
    }
  }
  return center;
}

}  // namespace mysticum
