#include "mysticum/cspoly.hpp"

#include <mutex>
#include <random>

namespace mysticum {

namespace {

MultiPoly var(int i) {  // 0-based letter index
  return MultiPoly::variable((*letter_vars())[i], letter_vars());
}

// product of distinct letters, e.g. letters {2,3,4} -> c*d*e
MultiPoly mono(std::initializer_list<int> letters) {
  Monomial m;
  for (int i : letters) m.e[i] = 1;
  return MultiPoly::from_terms({{m, Rational(1)}}, letter_vars());
}

IndexPerm index_perm_from_pairs(std::initializer_list<std::pair<int, int>> pairs1based) {
  IndexPerm p;
  for (auto [i, j] : pairs1based) p = IndexPerm::transposition(i - 1, j - 1) * p;
  return p;
}

}  // namespace

ConicSix<MultiPoly> symbolic_conic() {
  ConicSix<MultiPoly> six;
  for (int i = 0; i < 6; ++i) {
    BinaryForm<MultiPoly> lin({MultiPoly(1), -var(i)});
    six[i] = lin * lin;
  }
  return six;
}

BinaryForm<MultiPoly> symbolic_cs_line(const Triple& alpha) {
  static std::mutex mu;
  static std::map<std::string, BinaryForm<MultiPoly>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(alpha.str());
  if (it != cache.end()) return it->second;
  static const ConicSix<MultiPoly> six = symbolic_conic();
  auto g = cayley_salmon_form(six, alpha);
  if (!g || g->is_zero()) throw InternalDegeneracyError();
  cache.emplace(alpha.str(), *g);
  return *g;
}

MultiPoly cs_polynomial(const Triple& alpha) {
  static std::mutex mu;
  static std::map<std::string, MultiPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(alpha.str());
    if (it != cache.end()) return it->second;
  }
  BinaryForm<MultiPoly> q = symbolic_cs_line(alpha);
  BinaryForm<MultiPoly> qc = symbolic_cs_line(alpha.complement());
  BinaryForm<MultiPoly> pairing = transvectant(q, qc, 2);  // order 0
  MultiPoly raw = pairing.coeff(0);
  if (raw.is_zero()) throw InternalDegeneracyError();
  MultiPoly out = strip_difference_content(raw).stripped;
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(alpha.str(), out);
  return out;
}

MultiPoly apply_letter_perm(const MultiPoly& p, const LetterPerm& eta) {
  std::vector<int> sigma(6);
  for (int i = 0; i < 6; ++i) sigma[i] = eta(i);
  return mpoly_substitute_vars(p, sigma);
}

const MultiPoly& literal_L1() {
  // a=0 b=1 c=2 d=3 e=4 f=5
  static const MultiPoly L1 =
      mono({2, 3, 4}) + mono({1, 2, 3}) + mono({0, 3, 5}) + mono({0, 1, 4}) + mono({1, 4, 5}) +
      mono({0, 2, 5}) - mono({0, 2, 3}) - mono({1, 3, 4}) - mono({2, 3, 5}) - mono({1, 2, 4}) -
      mono({0, 4, 5}) - mono({0, 1, 5});
  return L1;
}

FactorFamily factor_family(const Triple& alpha) {
  static const std::array<MultiPoly, 6> base = [] {
    std::array<MultiPoly, 6> fam;
    fam[0] = literal_L1();
    fam[1] = apply_letter_perm(fam[0], zeta_inv(index_perm_from_pairs({{1, 2}})));
    fam[2] = apply_letter_perm(fam[0], zeta_inv(index_perm_from_pairs({{1, 3}})));
    fam[3] = apply_letter_perm(fam[0], zeta_inv(index_perm_from_pairs({{1, 4}, {2, 5}, {3, 6}})));
    fam[4] = apply_letter_perm(fam[3], zeta_inv(index_perm_from_pairs({{4, 5}})));
    fam[5] = apply_letter_perm(fam[3], zeta_inv(index_perm_from_pairs({{4, 6}})));
    return fam;
  }();

  FactorFamily out{alpha, {}};
  // canonical transport sending {1,2,3} to alpha, complement ascending
  IndexPerm tau = canonical_label_transport(PascalLabel(alpha.x, alpha.y, alpha.z));
  LetterPerm eta = zeta_inv(tau);
  for (int v = 0; v < 6; ++v) out.factor[tau(v)] = apply_letter_perm(base[v], eta);
  return out;
}

bool verify_invariance(const MultiPoly& factor, int trials, uint64_t rng_seed) {
  require(!factor.is_zero() && factor.total_degree() == 3 && factor.is_homogeneous(),
          "verify_invariance: cubic factor required");

  std::mt19937_64 rng(rng_seed);
  std::uniform_int_distribution<int> coef(-9, 9);
  VarsPtr vars = letter_vars();
  for (int trial = 0; trial < trials; ++trial) {
    Rational p, q, r, s, det;
    do {
      p = coef(rng);
      q = coef(rng);
      r = coef(rng);
      s = coef(rng);
      det = p * s - q * r;
    } while (det.is_zero());

    // denominators cleared by (r v + s)^(deg_v factor); for the genuine
    // family members every per-variable degree is one
    MultiPoly lhs = MultiPoly::zero(vars);
    for (const auto& [m, c] : factor.terms()) {
      MultiPoly term = MultiPoly::constant(c, vars);
      for (int v = 0; v < 6; ++v) {
        for (int k = 0; k < m.e[v]; ++k) term *= p * var(v) + MultiPoly::constant(q, vars);
        for (int k = m.e[v]; k < factor.degree_in(v); ++k)
          term *= r * var(v) + MultiPoly::constant(s, vars);
      }
      lhs += term;
    }
    MultiPoly rhs = (det * det * det) * factor;
    if (lhs != rhs) return false;
  }
  return true;
}

namespace {

using RF = RatFunc<Rational>;

std::vector<RF> alignment_substitution() {
  RF t = RF::variable("t");
  return {RF(Rational(1)),
          RF(Rational(0)),
          RF(Rational(-1)),
          (RF(1) - t) / (RF(1) + t),
          RF(1) / (RF(2) * t - RF(1)),
          t / (t - RF(2))};
}

}  // namespace

bool vanishing_on_alignment(const MultiPoly& factor) {
  return mpoly_evaluate<RF>(factor, alignment_substitution()).is_zero();
}

BranchReport branch_analysis() {
  BranchReport rep;
  VarsPtr vars = letter_vars();
  auto d = var(3), e = var(4), f = var(5);

  // reductions at a=1, b=0, c=-1
  std::vector<MultiPoly> abc = {MultiPoly(1), MultiPoly(0), MultiPoly(-1), d, e, f};
  auto reduce_abc = [&](const MultiPoly& p) { return mpoly_evaluate<MultiPoly>(p, abc); };

  MultiPoly l1_red = reduce_abc(literal_L1());
  MultiPoly l1_target = d - d * e + Rational(2) * (d * f) - f - e * f;  // d(1-e+2f) - f(1+e)
  rep.l1_reduces_to_stated_equation = mpoly_proportional(l1_red, l1_target);

  FactorFamily fam124 = factor_family(Triple(1, 2, 4));
  MultiPoly l1p_red = reduce_abc(fam124.by_index(1));
  MultiPoly l1p_target = d + e - f - d * e * f;
  rep.l1prime_reduces_to_stated_equation = mpoly_proportional(l1p_red, l1p_target);
  MultiPoly l2p_red = reduce_abc(fam124.by_index(2));
  MultiPoly l2p_target = d - d * e - d * f + Rational(2) * (e * f) - d * e * f;
  rep.l2prime_reduces_to_stated_equation = mpoly_proportional(l2p_red, l2p_target);

  RF t = RF::variable("t");

  // L1' branch parametric solution
  {
    RF ds = t;
    RF es = (RF(2) * t * t) / (RF(1) + t * t);
    RF fs = (t * (t + RF(1))) / (RF(2) * t * t - t + RF(1));
    std::vector<RF> vals = {RF(1), RF(0), RF(-1), ds, es, fs};
    rep.l1prime_solution_satisfies_both = mpoly_evaluate<RF>(l1_target, vals).is_zero() &&
                                          mpoly_evaluate<RF>(l1p_target, vals).is_zero();
    // the displayed hexad (1, 0, t, -1, f(t), e(t)) is an alignment over Q(t)
    Hexad<RF> h(std::array<P1Point<RF>, 6>{P1Point<RF>(RF(1)), P1Point<RF>(RF(0)),
                                           P1Point<RF>(t), P1Point<RF>(RF(-1)), P1Point<RF>(fs),
                                           P1Point<RF>(es)});
    rep.l1prime_solution_is_alignment = is_alignment(h);
  }

  // L2' branch parametric solution
  {
    RF ds = t / (RF(2) + t);
    RF es = (t - RF(1)) / (t + RF(3));
    RF fs = t;
    std::vector<RF> vals = {RF(1), RF(0), RF(-1), ds, es, fs};
    rep.l2prime_solution_satisfies_both = mpoly_evaluate<RF>(l1_target, vals).is_zero() &&
                                          mpoly_evaluate<RF>(l2p_target, vals).is_zero();

    MultiPoly cs125 = cs_polynomial(Triple(1, 2, 5));
    MultiPoly cs125_def = mpoly_evaluate<MultiPoly>(cs125, abc);  // in d, e, f only
    RF restricted = mpoly_evaluate<RF>(cs125_def, vals);
    UniPoly<Rational> one(Rational(1), "t");
    auto up = [&](std::initializer_list<Rational> cs) {
      return UniPoly<Rational>(std::vector<Rational>(cs), "t");
    };
    UniPoly<Rational> core = up({-3, 1}) * up({-1, 3}) * up({1, 3});
    UniPoly<Rational> tsq1 = up({1, 0, 1});
    core = core * tsq1 * tsq1;
    {
      UniPoly<Rational> den = one;
      for (int i = 0; i < 10; ++i) den = den * up({2, 1});
      for (int i = 0; i < 11; ++i) den = den * up({3, 1});
      RF stated_ratio = restricted / RF(core, den);
      rep.cs125_restriction_stated_matches = !restricted.is_zero() && stated_ratio.is_constant();
    }
    {
      UniPoly<Rational> num = up({0, 0, 1});  // t^2
      for (int i = 0; i < 6; ++i) num = num * up({1, 1});
      num = num * core;
      UniPoly<Rational> den = one;
      for (int i = 0; i < 6; ++i) den = den * up({2, 1});
      for (int i = 0; i < 5; ++i) den = den * up({3, 1});
      RF ratio = restricted / RF(num, den);
      rep.cs125_restriction_canonical_matches = !restricted.is_zero() && ratio.is_constant();
      if (ratio.is_constant()) rep.cs125_restriction_constant = ratio.constant_value();
    }

    // tri-involutivity exactly at the special values of t
    auto rational_sextuple_at = [&](const Rational& tv) {
      std::array<P1Point<Rational>, 6> pts = {
          P1Point<Rational>(Rational(1)),
          P1Point<Rational>(Rational(0)),
          P1Point<Rational>(Rational(-1)),
          P1Point<Rational>(ds.evaluate(tv)),
          P1Point<Rational>(es.evaluate(tv)),
          P1Point<Rational>(fs.evaluate(tv)),
      };
      return Sextuple<Rational>(pts);
    };
    bool special_ok = true;
    for (const Rational& tv : {Rational(3), Rational(1, 3), Rational(-1, 3)})
      special_ok = special_ok && !find_alignments(rational_sextuple_at(tv)).empty();
    using GR = GaussianRational;
    for (const GR& tv : {GR::i(), -GR::i()}) {
      GR dsv = tv / (GR(2) + tv);
      GR esv = (tv - GR(1)) / (tv + GR(3));
      std::array<P1Point<GR>, 6> pts = {P1Point<GR>(GR(1)),  P1Point<GR>(GR(0)),
                                        P1Point<GR>(GR(-1)), P1Point<GR>(dsv),
                                        P1Point<GR>(esv),    P1Point<GR>(tv)};
      special_ok = special_ok && !find_alignments(Sextuple<GR>(pts)).empty();
    }
    rep.l2prime_tri_involutive_at_special_t = special_ok;

    rep.l2prime_not_tri_involutive_generic =
        !restricted.evaluate(Rational(2)).is_zero() &&
        find_alignments(rational_sextuple_at(Rational(2))).empty();
  }

  // the worked alignment at t = 1/3
  {
    std::array<P1Point<Rational>, 6> pts = {
        P1Point<Rational>(Rational(1)),      P1Point<Rational>(Rational(1, 7)),
        P1Point<Rational>(Rational(-1, 5)),  P1Point<Rational>(Rational(0)),
        P1Point<Rational>(Rational(1, 3)),   P1Point<Rational>(Rational(-1)),
    };
    rep.stated_third_hexad_is_alignment = is_alignment(Hexad<Rational>(pts));
  }
  return rep;
}

}  // namespace mysticum
