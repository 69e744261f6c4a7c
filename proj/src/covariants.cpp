#include "mysticum/covariants.hpp"

namespace mysticum {

SyzygyReport verify_syzygies() {
  BinaryForm<MultiPoly> F = generic_sextic();
  ThetaTriple<MultiPoly> t = theta(F);
  SyzygyReport rep;
  rep.linear_syzygy_holds = transvectant(t.theta54, F, 4).is_zero();
  rep.quadratic_syzygy_holds = transvectant(t.theta54, t.theta24, 4).is_zero();
  return rep;
}

namespace {

using UP = UniPoly<Rational>;

// (p-1)p*Psi_p = -x1 x2 (x1-x2)(x1-p x2)(p x1-(p-1) x2)((1-p) x1-x2),
// a sextic with polynomial coefficients in p.
BinaryForm<UP> cleared_psi_sextic() {
  const std::string v = "p";
  auto cpoly = [&](std::initializer_list<Rational> cs) { return UP(std::vector<Rational>(cs), v); };
  BinaryForm<UP> f({UP(Rational(-1), v)});
  // x1, then x2, then (x1 - x2)
  f = f * BinaryForm<UP>({UP(Rational(1), v), UP(Rational(0), v)});
  f = f * BinaryForm<UP>({UP(Rational(0), v), UP(Rational(1), v)});
  f = f * BinaryForm<UP>({UP(Rational(1), v), UP(Rational(-1), v)});
  // (x1 - p x2)
  f = f * BinaryForm<UP>({cpoly({1}), cpoly({0, -1})});
  // (p x1 - (p-1) x2)
  f = f * BinaryForm<UP>({cpoly({0, 1}), cpoly({1, -1})});
  // ((1-p) x1 - x2)
  f = f * BinaryForm<UP>({cpoly({1, -1}), cpoly({-1})});
  return f;
}

// exact coefficient-wise quotient form/T^k when it exists
std::optional<UP> divide_by_center_line_power(const BinaryForm<UP>& form, int k, const std::string& var) {
  // T^k has rational coefficients; solve  form = q * T^k  for a single
  // polynomial q by long division in the x-variables.
  BinaryForm<UP> tpow({UP(Rational(1), var)});
  BinaryForm<UP> T({UP(Rational(1), var), UP(Rational(-1), var), UP(Rational(1), var)});
  for (int i = 0; i < k; ++i) tpow = tpow * T;
  if (form.degree() != tpow.degree()) return std::nullopt;
  // q must equal the ratio of leading coefficients
  UP q = form.coeff(0);  // leading coefficient of T^k is 1
  BinaryForm<UP> residue = form - q * tpow;
  if (!residue.is_zero()) return std::nullopt;
  return q;
}

}  // namespace

PsiCovariantProfile psi_covariant_profile() {
  const std::string var = "p";
  BinaryForm<UP> F = cleared_psi_sextic();
  ThetaTriple<UP> t = theta(F);
  PsiCovariantProfile prof;

  auto q24 = divide_by_center_line_power(t.theta24, 2, var);
  prof.theta24_is_multiple_of_T2 = q24.has_value();
  if (q24) prof.theta24_multiplier = *q24;
  auto q32 = divide_by_center_line_power(t.theta32, 1, var);
  prof.theta32_is_multiple_of_T = q32.has_value();
  if (q32) prof.theta32_multiplier = *q32;
  prof.theta54_vanishes = t.theta54.is_zero();

  // scale back to the original Psi_p: theta24 picks up ((p-1)p)^2 from the
  // clearing factor, theta32 picks up ((p-1)p)^3
  UP clearing({Rational(0), Rational(-1), Rational(1)}, var);  // p^2 - p
  if (q24) prof.f1 = RatFunc<Rational>(*q24, clearing * clearing);
  if (q32) prof.f2 = RatFunc<Rational>(*q32, clearing * clearing * clearing);
  return prof;
}

}  // namespace mysticum
