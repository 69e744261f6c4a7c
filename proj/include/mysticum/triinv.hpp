#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "mysticum/gaussian.hpp"
#include "mysticum/hexagram.hpp"
#include "mysticum/ratfunc.hpp"

namespace mysticum {

class DegenerateParameterError : public domain_error {
 public:
  explicit DegenerateParameterError(const char* what) : domain_error(what) {}
};

// Unordered set of six distinct conic points.
template <class K>
struct Sextuple {
  std::array<P1Point<K>, 6> pts;

  explicit Sextuple(std::array<P1Point<K>, 6> p) : pts(std::move(p)) {
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        require(!(pts[i] == pts[j]), "Sextuple: coincident points");
  }

  Hexad<K> as_hexad() const { return Hexad<K>(pts); }

  friend bool set_equal(const Sextuple& a, const Sextuple& b) {
    for (const auto& p : a.pts) {
      bool found = false;
      for (const auto& q : b.pts)
        if (p == q) {
          found = true;
          break;
        }
      if (!found) return false;
    }
    return true;
  }
};

template <class K>
bool parameter_admissible(const K& p) {
  if (is_zero(p) || is_zero(p - K(1))) return false;
  return !is_zero(p * p - p + K(1));
}

// The standard hexad A=0, B=1, C=inf, D=p, E=(p-1)/p, F=1/(1-p).
template <class K>
Hexad<K> standard_hexad(const K& p) {
  if (!parameter_admissible(p))
    throw DegenerateParameterError("psi: p in {0, 1, inf} or p^2 - p + 1 = 0");
  std::array<P1Point<K>, 6> pts = {
      P1Point<K>(K(0)),
      P1Point<K>(K(1)),
      P1Point<K>::infinity(),
      P1Point<K>(p),
      P1Point<K>((p - K(1)) / p),
      P1Point<K>(K(1) / (K(1) - p)),
  };
  return Hexad<K>(pts);
}

template <class K>
Sextuple<K> psi(const K& p) {
  return Sextuple<K>(standard_hexad(p).pts);
}

// The defining cross-ratio equalities <A,B,C,F> = <B,C,A,E> = <C,A,B,D>.
template <class K>
bool is_alignment(const Hexad<K>& h) {
  const auto& P = h.pts;
  P1Point<K> cr1 = cross_ratio(P[0], P[1], P[2], P[5]);
  P1Point<K> cr2 = cross_ratio(P[1], P[2], P[0], P[4]);
  if (!(cr1 == cr2)) return false;
  P1Point<K> cr3 = cross_ratio(P[2], P[0], P[1], P[3]);
  return cr1 == cr3;
}

template <class K>
P1Point<K> alignment_cross_ratio(const Hexad<K>& h) {
  return cross_ratio(h.pts[0], h.pts[1], h.pts[2], h.pts[5]);
}

// Brute force over all 720 hexads with the given image; empty exactly when
// the sextuple is not tri-involutive. Enumeration order is deterministic.
template <class K>
std::vector<Hexad<K>> find_alignments(const Sextuple<K>& s) {
  std::vector<Hexad<K>> out;
  Hexad<K> base = s.as_hexad();
  for (const auto& perm : all_perms<LetterTag>()) {
    Hexad<K> h = base.precomposed(perm);
    if (is_alignment(h)) out.push_back(h);
  }
  return out;
}

// The subgroup RL(p) of letter shuffles preserving the alignment property
// of the standard hexad.
template <class K>
std::vector<LetterPerm> alignment_group(const K& p) {
  Hexad<K> h = standard_hexad(p);
  std::vector<LetterPerm> out;
  for (const auto& perm : all_perms<LetterTag>())
    if (is_alignment(h.precomposed(perm))) out.push_back(perm);
  return out;
}

// Generic parameter: exact arithmetic over the function field Q(p).
inline std::vector<LetterPerm> alignment_group_generic() {
  return alignment_group(RatFunc<Rational>::variable("p"));
}

// Closed-form solution of the two-triangle perspectivity system: given the
// first triangle {0, 1, inf} and one vertex u of the second, the remaining
// vertices are {(u-1)/u, 1/(1-u)}, and the resulting sextuple shares one
// Chasles center between its two triangles.
template <class K>
Sextuple<K> chasles_converse(const K& u) {
  if (!parameter_admissible(u))
    throw DegenerateParameterError("chasles_converse: u in {0, 1, inf} or u^2 - u + 1 = 0");
  K v = (u - K(1)) / u;
  K w = K(1) / (K(1) - u);
  Sextuple<K> s(std::array<P1Point<K>, 6>{P1Point<K>(K(0)), P1Point<K>(K(1)),
                                          P1Point<K>::infinity(), P1Point<K>(u), P1Point<K>(v),
                                          P1Point<K>(w)});
  Triangle<K> d1 = {s.pts[0], s.pts[1], s.pts[2]};
  Triangle<K> d2 = {s.pts[3], s.pts[4], s.pts[5]};
  check_theorem(same_element(chasles_center(d1), chasles_center(d2)),
                "chasles_converse: centers differ");
  return s;
}

// ---- the special parameters p = +-i, 1 +- i, (1 +- i)/2 ---------------------

bool is_special_parameter(const GaussianRational& p);

struct CenterPair {
  std::array<int, 3> tri1;  // letters of the first triangle, 0-based
  std::array<int, 3> tri2;
  BinaryForm<GaussianRational> center;  // common Chasles center T_i
};

struct SpecialCenterReport {
  std::array<CenterPair, 4> pairs;  // T1..T4 in the fixed order below
  // the twelve centres of involution: matchings of the sextuple whose three
  // chords concur, together with the common point
  std::vector<BinaryForm<GaussianRational>> involution_centers;
  bool centers_by_threes_on_four_lines = false;
  bool klein_action_matches = false;  // (A E) -> (T1 T2)(T3 T4), (C F) -> (T1 T4)(T2 T3)
};

// Verifies the twelve-center geometry at a special parameter: the four
// triangle decompositions sharing centers, three involution centers on the
// polar line of each T_i, and the Klein-group action on {T1..T4}.
SpecialCenterReport special_center_profile(const GaussianRational& p);

}  // namespace mysticum
