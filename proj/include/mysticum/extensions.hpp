#pragma once

#include <cmath>
#include <complex>
#include <type_traits>

#include "mysticum/covariants.hpp"

namespace mysticum {

class SeedDegenerateError : public domain_error {
 public:
  explicit SeedDegenerateError(const char* what) : domain_error(what) {}
};
class ExtensionCollisionError : public domain_error {
 public:
  ExtensionCollisionError() : domain_error("extensions: computed extensions collide (seed not general)") {}
};

using Complex = std::complex<double>;

// Numeric point of the complex projective line, kept with unit-norm
// homogeneous coordinates so the chordal metric is well conditioned.
struct CP1 {
  Complex u, v;

  static CP1 make(Complex u_, Complex v_) {
    double n = std::sqrt(std::norm(u_) + std::norm(v_));
    require(n > 0, "CP1: zero vector");
    return CP1{u_ / n, v_ / n};
  }
  static CP1 affine(Complex z) { return make(z, 1.0); }
  static CP1 infinity() { return make(1.0, 0.0); }
};

// sine of the projective angle; zero iff equal points
inline double chordal_distance(const CP1& a, const CP1& b) {
  return std::abs(a.u * b.v - b.u * a.v);
}

template <class K>
CP1 to_cp1(const P1Point<K>& z);
template <>
inline CP1 to_cp1<Rational>(const P1Point<Rational>& z) {
  return CP1::make(z.u().to_double(), z.v().to_double());
}
template <>
inline CP1 to_cp1<GaussianRational>(const P1Point<GaussianRational>& z) {
  return CP1::make(z.u().to_complex(), z.v().to_complex());
}

// One tri-involutive extension of the seed: the full sextuple in the
// original frame, numerically always, exactly on the linear branch.
template <class K>
struct Extension {
  bool exact = false;
  std::optional<Sextuple<K>> exact_points;
  std::array<CP1, 6> numeric_points;      // original frame
  std::array<CP1, 2> added_normalized;    // the two new points over {0,1,inf,r}
};

template <class K>
struct ExtensionSet {
  std::array<P1Point<K>, 4> seed;
  K normalized_r;                    // cross-ratio coordinate of the seed
  std::vector<Extension<K>> items;   // 4 exact then 12 numeric
  int distinct_count = 0;            // distinct added pairs within tolerance
};

// All tri-involutive sextuples containing the seed. The four linear-branch
// extensions come from closed formulas and stay exact; the twelve
// quadratic-branch extensions are computed in complex floating point. The
// sixteen results are checked pairwise distinct and tri-involutive (exact
// alignment search on the linear branch, theta54 within tolerance on the
// quadratic one).
// allow_collisions keeps non-general seeds from throwing and reports the
// true number of distinct extensions instead
template <class K>
ExtensionSet<K> extensions(const std::array<P1Point<K>, 4>& seed, double tolerance = 1e-9,
                           bool allow_collisions = false);

// ---- implementation ---------------------------------------------------------

namespace detail {

// quadratic/linear polynomials in one complex unknown
struct CPoly {
  std::array<Complex, 3> c{};  // c[k] * x^k

  static CPoly constant(Complex v) { return CPoly{{v, 0.0, 0.0}}; }
  static CPoly linear(Complex c1, Complex c0) { return CPoly{{c0, c1, 0.0}}; }

  friend CPoly operator*(const CPoly& a, const CPoly& b) {
    CPoly r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (a.c[i] == Complex() || b.c[j] == Complex()) continue;
        check_theorem(i + j < 3, "extensions: equation degree overflow");
        r.c[i + j] += a.c[i] * b.c[j];
      }
    return r;
  }
  friend CPoly operator-(const CPoly& a, const CPoly& b) {
    CPoly r;
    for (int i = 0; i < 3; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
};

// known point or the affine unknown of the solve step
struct MaybeUnknown {
  bool known = true;
  CP1 value{};  // when known

  CPoly det_with(const MaybeUnknown& o) const {
    // d(X, Y) = xu yv - yu xv, as a polynomial in the unknown(s)
    if (known && o.known)
      return CPoly::constant(value.u * o.value.v - o.value.u * value.v);
    if (!known && o.known)  // X = (x, 1)
      return CPoly::linear(o.value.v, -o.value.u);
    if (known && !o.known)  // Y = (y, 1)
      return CPoly::linear(-value.v, value.u);
    throw domain_error("extensions: two unknowns in one determinant");
  }
};

inline std::array<Complex, 2> solve_quadratic(const CPoly& q) {
  double scale = std::max({std::abs(q.c[0]), std::abs(q.c[1]), std::abs(q.c[2])});
  require(scale > 0, "extensions: zero equation");
  if (std::abs(q.c[2]) < 1e-12 * scale)
    throw SeedDegenerateError("extensions: quadratic degenerates, seed not general");
  Complex disc = std::sqrt(q.c[1] * q.c[1] - 4.0 * q.c[2] * q.c[0]);
  // the numerically stable pairing
  Complex qq = (std::real(std::conj(q.c[1]) * disc) >= 0) ? -0.5 * (q.c[1] + disc)
                                                          : -0.5 * (q.c[1] - disc);
  return {qq / q.c[2], q.c[0] / qq};
}

}  // namespace detail

template <class K>
ExtensionSet<K> extensions(const std::array<P1Point<K>, 4>& seed, double tolerance,
                           bool allow_collisions) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (seed[i] == seed[j]) throw SeedDegenerateError("extensions: coincident seed points");

  ExtensionSet<K> out;
  out.seed = seed;
  Mobius<K> to_std = Mobius<K>::to_standard_frame(seed[0], seed[1], seed[2]);
  Mobius<K> from_std = to_std.inverse();
  P1Point<K> rp = apply_flt(to_std, seed[3]);
  if (rp.is_infinity()) throw SeedDegenerateError("extensions: seed not in general position");
  K r = rp.affine();
  K r2r1 = r * r - r + K(1);
  if (is_zero(r) || is_zero(r - K(1)) || is_zero(r2r1))
    throw SeedDegenerateError("extensions: seed cross-ratio degenerate");
  out.normalized_r = r;

  // complex entries of the inverse frame map
  auto cval = [](const K& x) {
    if constexpr (std::is_same_v<K, Rational>)
      return Complex(x.to_double(), 0.0);
    else
      return x.to_complex();
  };
  auto apply_inv_numeric = [&](const CP1& z) {
    return CP1::make(cval(from_std.a) * z.u + cval(from_std.b) * z.v,
                     cval(from_std.c) * z.u + cval(from_std.d) * z.v);
  };

  // ---- linear branch: exact closed formulas over {0,1,inf,r} ----
  const std::array<std::array<K, 2>, 4> linear_pairs = {{
      {{r2r1 / r, r2r1}},
      {{r * r / (r - K(1)), r - r * r}},
      {{r / r2r1, r * r / r2r1}},
      {{K(1) / (K(1) - r), (r - K(1)) / r}},
  }};
  for (const auto& pr : linear_pairs) {
    std::array<P1Point<K>, 6> pts = {P1Point<K>(K(0)),   P1Point<K>(K(1)),
                                     P1Point<K>::infinity(), P1Point<K>(r),
                                     P1Point<K>(pr[0]),  P1Point<K>(pr[1])};
    std::array<P1Point<K>, 6> orig;
    for (int i = 0; i < 6; ++i) orig[i] = apply_flt(from_std, pts[i]);
    Extension<K> ext;
    ext.exact = true;
    try {
      ext.exact_points = Sextuple<K>(orig);
    } catch (const domain_error&) {
      throw ExtensionCollisionError();
    }
    for (int i = 0; i < 6; ++i) ext.numeric_points[i] = to_cp1<K>(orig[i]);
    ext.added_normalized = {CP1::affine(cval(pr[0])), CP1::affine(cval(pr[1]))};
    out.items.push_back(std::move(ext));
  }

  // ---- quadratic branch: the six reduced assignment classes ----
  // assignment [v1,v2,v3,v4]: seed values (0,1,inf,r) go to those letters;
  // letters a,b,e,f are covered, c and d remain unknown.
  using detail::MaybeUnknown;
  const CP1 z0 = CP1::affine(0.0), z1 = CP1::affine(1.0), zi = CP1::infinity(),
            zr = CP1::affine(cval(r));
  struct Assign {
    char slots[4];  // letters receiving z1..z4
  };
  const Assign assigns[6] = {{{'a', 'b', 'e', 'f'}}, {{'a', 'b', 'f', 'e'}},
                             {{'a', 'e', 'b', 'f'}}, {{'a', 'f', 'b', 'e'}},
                             {{'a', 'e', 'f', 'b'}}, {{'a', 'f', 'e', 'b'}}};
  const CP1 seed_vals[4] = {z0, z1, zi, zr};

  for (const auto& as : assigns) {
    MaybeUnknown A, B, C, D, E, F;
    C.known = false;  // stage 1 unknown
    for (int k = 0; k < 4; ++k) {
      MaybeUnknown* slot = nullptr;
      switch (as.slots[k]) {
        case 'a': slot = &A; break;
        case 'b': slot = &B; break;
        case 'e': slot = &E; break;
        case 'f': slot = &F; break;
      }
      slot->known = true;
      slot->value = seed_vals[k];
    }
    // <A,B,C,F> = <B,C,A,E>:  dAC dBF dBE dCA = dAF dBC dBA dCE
    detail::CPoly lhs = A.det_with(C) * B.det_with(F) * (B.det_with(E) * C.det_with(A));
    detail::CPoly rhs = A.det_with(F) * B.det_with(C) * (B.det_with(A) * C.det_with(E));
    auto roots = detail::solve_quadratic(lhs - rhs);
    for (const Complex& c0 : roots) {
      MaybeUnknown Cv{true, CP1::affine(c0)};
      D.known = false;
      // <B,C,A,E> = <C,A,B,D>:  dBA dCE dCD dAB = dCB dAD dBE dCA
      auto lin = [&](const MaybeUnknown& X, const MaybeUnknown& Y) { return X.det_with(Y); };
      detail::CPoly l2 = lin(B, A) * lin(Cv, E) * (lin(Cv, D) * lin(A, B));
      detail::CPoly r2 = lin(Cv, B) * lin(A, D) * (lin(B, E) * lin(Cv, A));
      detail::CPoly eq = l2 - r2;  // linear in d
      double scale = std::max(std::abs(eq.c[0]), std::abs(eq.c[1]));
      if (!(scale > 0) || std::abs(eq.c[1]) < 1e-12 * scale)
        throw SeedDegenerateError("extensions: second unknown not determined");
      Complex d0 = -eq.c[0] / eq.c[1];

      Extension<K> ext;
      ext.exact = false;
      std::array<CP1, 6> letter_pts;  // a b c d e f
      letter_pts[0] = A.value;
      letter_pts[1] = B.value;
      letter_pts[2] = CP1::affine(c0);
      letter_pts[3] = CP1::affine(d0);
      letter_pts[4] = E.value;
      letter_pts[5] = F.value;
      for (int i = 0; i < 6; ++i) ext.numeric_points[i] = apply_inv_numeric(letter_pts[i]);
      ext.added_normalized = {CP1::affine(c0), CP1::affine(d0)};
      out.items.push_back(std::move(ext));
    }
  }

  // ---- distinctness of the sixteen added pairs in the normalized frame ----
  auto pair_distance = [](const std::array<CP1, 2>& x, const std::array<CP1, 2>& y) {
    double direct = std::max(chordal_distance(x[0], y[0]), chordal_distance(x[1], y[1]));
    double crossed = std::max(chordal_distance(x[0], y[1]), chordal_distance(x[1], y[0]));
    return std::min(direct, crossed);
  };
  check_theorem(out.items.size() == 16, "extensions: expected 16 candidates");
  std::vector<bool> duplicate(out.items.size(), false);
  for (size_t i = 0; i < out.items.size(); ++i)
    for (size_t j = i + 1; j < out.items.size(); ++j)
      if (pair_distance(out.items[i].added_normalized, out.items[j].added_normalized) < tolerance) {
        if (!allow_collisions) throw ExtensionCollisionError();
        duplicate[j] = true;
      }
  out.distinct_count = 0;
  for (bool d : duplicate) out.distinct_count += d ? 0 : 1;
  // new points must avoid the seed as well
  for (const auto& item : out.items)
    for (const auto& np : item.added_normalized)
      for (const auto& sv : seed_vals)
        if (chordal_distance(np, sv) < tolerance) {
          if (!allow_collisions) throw ExtensionCollisionError();
        }

  // ---- tri-involutivity of every member ----
  for (const auto& item : out.items) {
    if (item.exact) {
      check_theorem(!find_alignments(*item.exact_points).empty(),
                    "extensions: exact extension not tri-involutive");
    } else {
      // unit-norm homogeneous factors keep the sextic well conditioned
      BinaryForm<Complex> sext({Complex(1.0)});
      for (const CP1& z : item.numeric_points)
        sext = sext * BinaryForm<Complex>({z.v, -z.u});
      double maxc = 0;
      for (const auto& c : sext.coeffs()) maxc = std::max(maxc, std::abs(c));
      BinaryForm<Complex> norm = Complex(1.0 / maxc) * sext;
      BinaryForm<Complex> th54 = theta(norm).theta54;
      double worst = 0;
      for (const auto& c : th54.coeffs()) worst = std::max(worst, std::abs(c));
      check_theorem(worst <= tolerance, "extensions: quadratic extension fails theta54 test");
    }
  }
  return out;
}

}  // namespace mysticum
