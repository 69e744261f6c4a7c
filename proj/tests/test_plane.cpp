#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "mysticum/plane.hpp"
#include "mysticum/triinv.hpp"
#include "test_support.hpp"

using namespace mysticum;

namespace {
using P = P1Point<Rational>;
BinaryForm<Rational> bf(std::initializer_list<Rational> cs) {
  return BinaryForm<Rational>(std::vector<Rational>(cs));
}
}  // namespace

TEST_CASE("conic points") {
  CHECK(conic_point(P(Rational(3))).form == bf({1, -6, 9}));
  CHECK(conic_point(P::infinity()).form == bf({0, 0, 1}));
  CHECK(conic_point(P(Rational(0))).form == bf({1, 0, 0}));
  // points of the conic are exactly the self-conjugate elements
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    PlaneElement<Rational> e = conic_point(P(testgen::rational(rng)));
    CHECK(is_conjugate(e, e));
    BinaryForm<Rational> f = testgen::form(rng, 2);
    if (f.is_zero()) continue;
    PlaneElement<Rational> g(f, Role::point);
    // self-conjugate iff zero discriminant
    Rational disc = f.coeff(1) * f.coeff(1) - Rational(4) * (f.coeff(0) * f.coeff(2));
    CHECK(is_conjugate(g, g) == disc.is_zero());
  }
}

TEST_CASE("join and meet") {
  PlaneElement<Rational> e3 = conic_point(P(Rational(3)));
  PlaneElement<Rational> ec = conic_point(P::infinity());
  CHECK(join_or_meet(e3, ec).form == bf({0, 1, -3}));  // the line EC
  CHECK(proportional(join_or_meet(PlaneElement<Rational>(bf({1, 0, 0}), Role::point),
                                  PlaneElement<Rational>(bf({0, 0, 1}), Role::point))
                         .form,
                     bf({0, 1, 0})));
  PlaneElement<Rational> l(bf({0, 1, 0}), Role::line);
  CHECK_THROWS_AS(join_or_meet(l, l), DegenerateJoinError);
  // duality: for conic points the join is the product of the linear forms
  std::mt19937_64 rng(21);
  for (int t = 0; t < 20; ++t) {
    Rational a = testgen::rational(rng), b = testgen::rational(rng);
    if (a == b) continue;
    CHECK(proportional(join_or_meet(conic_point(P(a)), conic_point(P(b))).form,
                       chord(P(a), P(b)).form));
  }
}

TEST_CASE("incidence is conjugacy") {
  std::mt19937_64 rng(8);
  PlaneElement<Rational> p0 = conic_point(P(Rational(0)));
  PlaneElement<Rational> chord01 = join_or_meet(p0, conic_point(P(Rational(1))));
  CHECK(incident(p0, chord01));
  for (int t = 0; t < 40; ++t) {
    BinaryForm<Rational> f = testgen::form(rng, 2), g = testgen::form(rng, 2);
    if (f.is_zero() || g.is_zero()) continue;
    PlaneElement<Rational> pe(f, Role::point), le(g, Role::line);
    CHECK(incident(pe, le) == is_conjugate(pe, le));
  }
}

TEST_CASE("collinearity: determinant route against the join route") {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 60; ++t) {
    BinaryForm<Rational> a = testgen::form(rng, 2), b = testgen::form(rng, 2);
    if (a.is_zero() || b.is_zero() || proportional(a, b)) continue;
    PlaneElement<Rational> ea(a, Role::point), eb(b, Role::point);
    // a point on the join is collinear; a perturbed one generally is not
    PlaneElement<Rational> line = join_or_meet(ea, eb);
    BinaryForm<Rational> onspan =
        a.scaled_by_rational(testgen::rational(rng)) + b.scaled_by_rational(testgen::rational(rng));
    if (!onspan.is_zero()) {
      PlaneElement<Rational> ec(onspan, Role::point);
      CHECK(collinear(ea, eb, ec));
      CHECK(incident(ec, line));
    }
    BinaryForm<Rational> c = testgen::form(rng, 2);
    if (c.is_zero()) continue;
    PlaneElement<Rational> ecc(c, Role::point);
    CHECK(collinear(ea, eb, ecc) == incident(ecc, line));
  }
}

TEST_CASE("cross ratio") {
  using RF = RatFunc<Rational>;
  RF p = RF::variable("p");
  P1Point<RF> inf = P1Point<RF>::infinity();
  P1Point<RF> cr = cross_ratio(inf, P1Point<RF>(RF(0)), P1Point<RF>(RF(1)), P1Point<RF>(p));
  CHECK(cr == P1Point<RF>(p));

  // the standard alignment has common cross-ratio p on the second triple too
  Hexad<RF> h = standard_hexad(p);
  P1Point<RF> efdb = cross_ratio(h.pts[4], h.pts[5], h.pts[3], h.pts[1]);
  P1Point<RF> fdea = cross_ratio(h.pts[5], h.pts[3], h.pts[4], h.pts[0]);
  P1Point<RF> defc = cross_ratio(h.pts[3], h.pts[4], h.pts[5], h.pts[2]);
  CHECK(efdb == P1Point<RF>(p));
  CHECK(fdea == P1Point<RF>(p));
  CHECK(defc == P1Point<RF>(p));

  // six values under permutation
  std::mt19937_64 rng(31);
  for (int t = 0; t < 10; ++t) {
    std::array<P, 6> pts = testgen::distinct_points(rng);
    std::array<P, 4> z = {pts[0], pts[1], pts[2], pts[3]};
    Rational r = cross_ratio(z[0], z[1], z[2], z[3]).affine();
    if (r.is_zero() || r == Rational(1)) continue;
    std::set<std::string> seen;
    std::array<int, 4> idx = {0, 1, 2, 3};
    std::sort(idx.begin(), idx.end());
    do {
      P v = cross_ratio(z[idx[0]], z[idx[1]], z[idx[2]], z[idx[3]]);
      seen.insert(v.is_infinity() ? "inf" : v.affine().str());
    } while (std::next_permutation(idx.begin(), idx.end()));
    std::set<std::string> expect;
    for (const Rational& v :
         {r, Rational(1) / r, Rational(1) - r, Rational(1) / (Rational(1) - r),
          (r - Rational(1)) / r, r / (r - Rational(1))})
      expect.insert(v.str());
    CHECK(seen == expect);
  }

  P a(Rational(2)), b(Rational(5));
  CHECK_THROWS_AS(cross_ratio(a, b, a, a), IndeterminateCrossRatio);
}

TEST_CASE("fractional linear transformations") {
  std::mt19937_64 rng(44);
  Mobius<Rational> id = Mobius<Rational>::identity();
  P z(Rational(7, 3));
  CHECK(apply_flt(id, z) == z);

  Mobius<Rational> m = Mobius<Rational>::to_standard_frame(P(Rational(1)), P(Rational(0)), P(Rational(-1)));
  CHECK(apply_flt(m, P(Rational(1))) == P(Rational(0)));
  CHECK(apply_flt(m, P(Rational(0))) == P(Rational(1)));
  CHECK(apply_flt(m, P(Rational(-1))).is_infinity());

  CHECK_THROWS_AS(Mobius<Rational>(Rational(1), Rational(2), Rational(2), Rational(4)),
                  SingularMatrixError);

  for (int t = 0; t < 20; ++t) {
    Rational mp = testgen::rational(rng), mq = testgen::rational(rng);
    Rational mr = testgen::rational(rng), ms = testgen::rational(rng);
    if ((mp * ms - mq * mr).is_zero()) continue;
    Mobius<Rational> mu(mp, mq, mr, ms);
    std::array<P, 6> pts = testgen::distinct_points(rng);
    P before = cross_ratio(pts[0], pts[1], pts[2], pts[3]);
    P after = cross_ratio(apply_flt(mu, pts[0]), apply_flt(mu, pts[1]), apply_flt(mu, pts[2]),
                          apply_flt(mu, pts[3]));
    CHECK(before == after);
    // group action: inverse undoes
    CHECK(apply_flt(mu.inverse(), apply_flt(mu, pts[4])) == pts[4]);
  }
}

TEST_CASE("chasles center") {
  Triangle<Rational> base = {P(Rational(0)), P(Rational(1)), P::infinity()};
  BinaryForm<Rational> T = bf({1, -1, 1});
  CHECK(proportional(chasles_center(base).form, T));

  // tau(DEF) of the standard sextuple gives the same center
  for (const Rational& pv : {Rational(2), Rational(7, 3), Rational(-4)}) {
    Hexad<Rational> h = standard_hexad(pv);
    Triangle<Rational> def = {h.pts[3], h.pts[4], h.pts[5]};
    CHECK(proportional(chasles_center(def).form, T));
  }

  // tau(ADF) = tau(BCE) at the special parameter
  using GR = GaussianRational;
  Hexad<GR> hi = standard_hexad(GR::i());
  Triangle<GR> adf = {hi.pts[0], hi.pts[3], hi.pts[5]};
  Triangle<GR> bce = {hi.pts[1], hi.pts[2], hi.pts[4]};
  CHECK(same_element(chasles_center(adf), chasles_center(bce)));

  Triangle<Rational> degen = {P(Rational(0)), P(Rational(0)), P(Rational(1))};
  CHECK_THROWS_AS(chasles_center(degen), DegenerateTriangleError);
}
