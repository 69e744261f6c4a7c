#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mysticum/cspoly.hpp"
#include "test_support.hpp"

using namespace mysticum;

namespace {
using P = P1Point<Rational>;

Hexad<Rational> example_hexad() {
  return Hexad<Rational>({P(Rational(0)), P(Rational(1)), P::infinity(), P(Rational(-1)),
                          P(Rational(3)), P(Rational(-5))});
}
}  // namespace

TEST_CASE("labels") {
  CHECK(all_pascal_labels().size() == 60);
  CHECK(all_triples().size() == 20);
  CHECK(PascalLabel(1, 3, 2).y == 2);  // k(1,23) = k(1,32)
  CHECK(Triple(4, 5, 6).complement() == Triple(1, 2, 3));
  CHECK_THROWS_AS(PascalLabel(1, 1, 2), domain_error);
}

TEST_CASE("base pascal: cross-hair points are collinear") {
  Hexad<Rational> h = example_hexad();
  ConicSix<Rational> six = h.conic_forms();
  auto chord_ = [&](int p, int q) { return transvectant(six[p], six[q], 1); };
  BinaryForm<Rational> x1 = transvectant(chord_(0, 4), chord_(1, 5), 1);
  BinaryForm<Rational> x2 = transvectant(chord_(0, 3), chord_(2, 5), 1);
  BinaryForm<Rational> x3 = transvectant(chord_(1, 3), chord_(2, 4), 1);
  PlaneElement<Rational> e1(x1, Role::point), e2(x2, Role::point), e3(x3, Role::point);
  CHECK(collinear(e1, e2, e3));
  CHECK(incident(e3, PlaneElement<Rational>(pascal_form(six, PascalLabel(1, 2, 3)), Role::line)));
}

TEST_CASE("symbolic base pascal matches the classical coefficients") {
  ConicSix<MultiPoly> six = symbolic_conic();
  BinaryForm<MultiPoly> k123 = pascal_form(six, PascalLabel(1, 2, 3));
  VarsPtr vars = letter_vars();
  auto v = [&](const char* n) { return MultiPoly::variable(n, vars); };
  // x1^2 coefficient: cf - ce - ad - bf + bd + ae, up to overall sign
  MultiPoly expect = v("c") * v("f") - v("c") * v("e") - v("a") * v("d") - v("b") * v("f") +
                     v("b") * v("d") + v("a") * v("e");
  CHECK((k123.coeff(0) == expect || k123.coeff(0) == -expect));
  // x2^2 coefficient: acef - acde + bcdf - bcef + abde - abdf, same sign
  MultiPoly e22 = v("a") * v("c") * v("e") * v("f") - v("a") * v("c") * v("d") * v("e") +
                  v("b") * v("c") * v("d") * v("f") - v("b") * v("c") * v("e") * v("f") +
                  v("a") * v("b") * v("d") * v("e") - v("a") * v("b") * v("d") * v("f");
  bool plus = k123.coeff(0) == expect;
  CHECK(k123.coeff(2) == (plus ? e22 : -e22));
}

TEST_CASE("pascal is independent of the transport representative") {
  std::mt19937_64 rng(2026);
  Hexad<Rational> h(testgen::distinct_points(rng));
  ConicSix<Rational> six = h.conic_forms();
  // all 12 admissible index permutations for the label k(2,46)
  BinaryForm<Rational> ref = pascal_form(six, PascalLabel(2, 4, 6));
  std::array<uint8_t, 6> img = {0, 1, 2, 3, 4, 5};
  int count = 0;
  std::sort(img.begin(), img.end());
  do {
    if (img[0] != 1) continue;                            // sigma(1) = 2
    if (!((img[1] == 3 && img[2] == 5) || (img[1] == 5 && img[2] == 3))) continue;
    IndexPerm sigma(img);
    LetterPerm eta = zeta_inv(sigma);
    BinaryForm<Rational> line = base_pascal_form(permute_conic(six, eta));
    CHECK(proportional(line, ref));
    ++count;
  } while (std::next_permutation(img.begin(), img.end()));
  CHECK(count == 12);
}

TEST_CASE("label symmetry of pascal") {
  std::mt19937_64 rng(7);
  Hexad<Rational> h(testgen::distinct_points(rng));
  CHECK(proportional(pascal(h, PascalLabel(1, 2, 3)).form, pascal(h, PascalLabel(1, 3, 2)).form));
}

TEST_CASE("classical incidences on a random hexad") {
  std::mt19937_64 rng(5150);
  Hexad<Rational> h(testgen::distinct_points(rng));
  ConicSix<Rational> six = h.conic_forms();

  // Steiner point on its Cayley-Salmon line
  PlaneElement<Rational> G123 = steiner(h, Triple(1, 2, 3));
  auto g123 = cayley_salmon(h, Triple(1, 2, 3));
  REQUIRE(g123.has_value());
  CHECK(incident(G123, *g123));

  // Kirkman point lies on the three Pascals sharing its first index
  PlaneElement<Rational> K = kirkman(h, 1, Triple(2, 3, 4));
  for (auto lab : {PascalLabel(1, 2, 3), PascalLabel(1, 2, 4), PascalLabel(1, 3, 4)})
    CHECK(incident(K, pascal(h, lab)));

  // von Staudt conjugacy of complementary Steiner points
  CHECK(is_conjugate(G123, steiner(h, Triple(4, 5, 6))));

  // the three Kirkman points of a Cayley-Salmon line are collinear
  PlaneElement<Rational> K4 = kirkman(h, 4, Triple(1, 2, 3));
  PlaneElement<Rational> K5 = kirkman(h, 5, Triple(1, 2, 3));
  PlaneElement<Rational> K6 = kirkman(h, 6, Triple(1, 2, 3));
  CHECK(collinear(K4, K5, K6));
  CHECK(incident(K4, *g123));
  (void)six;
}

TEST_CASE("audit of a random hexad shows the classical profile") {
  std::mt19937_64 rng(777);
  Hexad<Rational> h(testgen::distinct_points(rng));
  ConfigurationReport rep = audit(h);
  CHECK(rep.general_position_profile);
  CHECK(rep.distinct_pascal == 60);
  CHECK(rep.distinct_steiner == 20);
  CHECK(rep.distinct_kirkman == 60);
  CHECK(rep.distinct_cayley_salmon == 20);
  CHECK(rep.von_staudt_conjugate_pairs == 10);
  CHECK(rep.kirkman_on_cs.matches(60, 1, 20, 3));
  CHECK(rep.kirkman_on_pascal.matches(60, 3, 60, 3));
  CHECK(rep.steiner_on_pascal.matches(20, 3, 60, 1));
  CHECK(rep.steiner_on_cs.matches(20, 1, 20, 1));
  CHECK(rep.kirkman_on_cs.consistent());
  CHECK(rep.csc_pairs.size() == 10);
  bool any_conjugate = false;
  for (const auto& pr : rep.csc_pairs)
    if (pr.status == CscStatus::conjugate) any_conjugate = true;
  CHECK_FALSE(any_conjugate);  // a general sextuple fails CSC outright
}

TEST_CASE("degenerate structure of the standard tri-involutive hexad") {
  Hexad<Rational> h = standard_hexad(Rational(3));
  ConicSix<Rational> six = h.conic_forms();

  // the three Kirkman points of the complementary triple coincide
  auto k1 = kirkman_form(six, 1, Triple(4, 5, 6));
  auto k2 = kirkman_form(six, 2, Triple(4, 5, 6));
  auto k3 = kirkman_form(six, 3, Triple(4, 5, 6));
  REQUIRE(k1.has_value());
  REQUIRE(k2.has_value());
  REQUIRE(k3.has_value());
  CHECK(proportional(*k1, *k2));
  CHECK(proportional(*k2, *k3));
  CHECK_FALSE(cayley_salmon_form(six, Triple(4, 5, 6)).has_value());
  CHECK_THROWS_AS(cayley_salmon(h, Triple(4, 5, 6)), DegenerateSteinerError);

  // ... and they sit at the pole of the center line T
  BinaryForm<Rational> T({Rational(1), Rational(-1), Rational(1)});
  CHECK(proportional(*k1, T));

  ConfigurationReport rep = audit(h);
  CHECK(rep.undefined_cayley_salmon.size() == 1);
  CHECK(rep.undefined_cayley_salmon[0] == Triple(4, 5, 6));
  CHECK(rep.undefined_steiner.size() == 1);
  CHECK(rep.undefined_steiner[0] == Triple(1, 2, 3));
  CHECK(rep.distinct_cayley_salmon == 13);
  CHECK(rep.csc_all_defined_conjugate);
  CHECK(rep.csc_checked() == 9);
  CHECK(rep.csc_skipped() == 1);
  CHECK(rep.von_staudt_checked_pairs == 9);
  CHECK(rep.von_staudt_conjugate_pairs == 9);
}
