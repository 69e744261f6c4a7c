#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mysticum/covariants.hpp"
#include "test_support.hpp"

using namespace mysticum;

namespace {
BinaryForm<Rational> bf(std::initializer_list<Rational> cs) {
  return BinaryForm<Rational>(std::vector<Rational>(cs));
}
}  // namespace

TEST_CASE("transvectant normalization anchors") {
  // ((x1 - 3 x2)^2, x2^2)_1 = x2 (x1 - 3 x2)
  BinaryForm<Rational> e = bf({1, -6, 9});
  BinaryForm<Rational> c = bf({0, 0, 1});
  CHECK(transvectant(e, c, 1) == bf({0, 1, -3}));
  // (x1^2, x2^2)_2 = 1
  CHECK(transvectant(bf({1, 0, 0}), bf({0, 0, 1}), 2) == bf({1}));
  // (f, f)_1 = 0 for any f
  std::mt19937_64 rng(2);
  for (int d = 1; d <= 6; ++d) {
    BinaryForm<Rational> f = testgen::form(rng, d);
    CHECK(transvectant(f, f, 1).is_zero());
  }
  CHECK_THROWS_AS(transvectant(bf({1, 0}), bf({1, 0}), 2), DegreeMismatchError);
}

TEST_CASE("transvectant agrees with the independent dense-formula oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int m = 1 + static_cast<int>(rng() % 6);
    int n = 1 + static_cast<int>(rng() % 6);
    BinaryForm<Rational> f = testgen::form(rng, m);
    BinaryForm<Rational> g = testgen::form(rng, n);
    int rmax = std::min(m, n);
    for (int r = 0; r <= rmax; ++r) CHECK(transvectant(f, g, r) == oracle::transvectant(f, g, r));
  }
}

TEST_CASE("bilinearity and symmetry sign") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    int m = 2 + static_cast<int>(rng() % 4);
    int n = 2 + static_cast<int>(rng() % 4);
    BinaryForm<Rational> f = testgen::form(rng, m), f2 = testgen::form(rng, m);
    BinaryForm<Rational> g = testgen::form(rng, n);
    Rational a = testgen::rational(rng), b = testgen::rational(rng);
    for (int r = 0; r <= std::min(m, n); ++r) {
      BinaryForm<Rational> lhs = transvectant(f.scaled_by_rational(a) + f2.scaled_by_rational(b), g, r);
      BinaryForm<Rational> rhs =
          transvectant(f, g, r).scaled_by_rational(a) + transvectant(f2, g, r).scaled_by_rational(b);
      CHECK(lhs == rhs);
      BinaryForm<Rational> sym = transvectant(g, f, r);
      CHECK(transvectant(f, g, r) == (r % 2 == 0 ? sym : -sym));
    }
  }
}

TEST_CASE("covariance under unimodular substitutions") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> small(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    // random SL2(Z) matrix from near-identity products
    Rational p(1), q(0), rr(0), s(1);
    for (int k = 0; k < 4; ++k) {
      int x = small(rng);
      // multiply by [[1,x],[0,1]] then [[1,0],[x,1]] keeps det = 1
      p = p + rr * Rational(x);
      q = q + s * Rational(x);
      int y = small(rng);
      rr = rr + p * Rational(y);
      s = s + q * Rational(y);
    }
    int m = 2 + static_cast<int>(rng() % 4), n = 2 + static_cast<int>(rng() % 4);
    BinaryForm<Rational> f = testgen::form(rng, m), g = testgen::form(rng, n);
    for (int r = 1; r <= std::min({m, n, 2}); ++r) {
      BinaryForm<Rational> lhs = transvectant(form_substitute(f, p, q, rr, s),
                                              form_substitute(g, p, q, rr, s), r);
      BinaryForm<Rational> rhs = form_substitute(transvectant(f, g, r), p, q, rr, s);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("sextic from roots") {
  using P = P1Point<Rational>;
  std::array<P, 6> pts = {P(Rational(0)), P(Rational(1)),  P::infinity(),
                          P(Rational(-1)), P(Rational(3)), P(Rational(-5))};
  BinaryForm<Rational> s = sextic_from_roots<Rational>(pts);
  // x1 x2 (x1 - x2)(x1 + x2)(x1 - 3 x2)(x1 + 5 x2) up to scalar
  BinaryForm<Rational> expect = bf({0, 1, 0}) * bf({1, -1}) * bf({1, 1}) * bf({1, -3}) * bf({1, 5});
  CHECK(proportional(s, expect));

  std::array<P, 6> zeros;
  zeros.fill(P(Rational(0)));
  CHECK(sextic_from_roots<Rational>(zeros) == bf({1, 0, 0, 0, 0, 0, 0}));

  // symbolic family: the root product clears to (p-1) p Psi_p
  using RF = RatFunc<Rational>;
  RF p = RF::variable("p");
  std::array<P1Point<RF>, 6> spts = {P1Point<RF>(RF(0)),
                                     P1Point<RF>(RF(1)),
                                     P1Point<RF>::infinity(),
                                     P1Point<RF>(p),
                                     P1Point<RF>((p - RF(1)) / p),
                                     P1Point<RF>(RF(1) / (RF(1) - p))};
  BinaryForm<RF> spf = sextic_from_roots<RF>(spts);
  // compare against the cleared polynomial-coefficient sextic
  BinaryForm<RF> cleared({RF(-1)});
  auto lin = [&](RF u, RF v) { return BinaryForm<RF>({std::move(u), std::move(v)}); };
  cleared = cleared * lin(RF(1), RF(0)) * lin(RF(0), RF(1)) * lin(RF(1), RF(-1)) *
            lin(RF(1), -p) * lin(p, RF(1) - p) * lin(RF(1) - p, RF(-1));
  BinaryForm<RF> scaled = (p * (p - RF(1))) * spf;
  bool prop = proportional(scaled, cleared);
  CHECK(prop);
}

TEST_CASE("proportional") {
  CHECK(proportional(bf({1, 0, -1}), bf({-3, 0, 3})));
  CHECK_FALSE(proportional(bf({1, 0, 0}), bf({0, 1, 0})));
  CHECK_THROWS_AS(proportional(bf({0, 0, 0}), bf({1, 0, 0})), ZeroFormError);
  CHECK_THROWS_AS(proportional(bf({1, 0}), bf({1, 0, 0})), DegreeMismatchError);
}

TEST_CASE("generic sextic carries binomial weights") {
  BinaryForm<MultiPoly> F = generic_sextic();
  CHECK(F.degree() == 6);
  for (int i = 0; i <= 6; ++i) {
    const MultiPoly& c = F.coeff(i);
    CHECK(c.term_count() == 1);
    CHECK(c.leading_term().second == Rational(binomial(6, i)));
  }
}

TEST_CASE("zero form is representable and flagged") {
  BinaryForm<Rational> z(4);
  CHECK(z.is_zero());
  CHECK(z.degree() == 4);
  std::mt19937_64 rng(1);
  CHECK_FALSE(testgen::form(rng, 4).is_zero());
}
