#pragma once

// Test-side helpers: independent oracles (kept deliberately separate from
// the library implementations they check) and deterministic random
// generators.

#include <random>
#include <vector>

#include "mysticum/binary_form.hpp"
#include "mysticum/p1.hpp"
#include "mysticum/gaussian.hpp"

namespace oracle {

using mysticum::Rational;

// Dense bivariate polynomial sum c[i][j] x1^i x2^j; an independent route
// to the transvectant via the raw factorial formula.
struct Dense {
  std::vector<std::vector<Rational>> c;

  static Dense zero(int d1, int d2) {
    Dense r;
    r.c.assign(d1 + 1, std::vector<Rational>(d2 + 1, Rational(0)));
    return r;
  }
  Rational at(int i, int j) const {
    if (i < 0 || j < 0 || i >= static_cast<int>(c.size()) ||
        j >= static_cast<int>(c[i].size()))
      return Rational(0);
    return c[i][j];
  }
};

inline Dense from_form(const mysticum::BinaryForm<Rational>& f) {
  int n = f.degree();
  Dense r = Dense::zero(n, n);
  for (int i = 0; i <= n; ++i) r.c[n - i][i] = f.coeff(i);
  return r;
}

inline Dense diff_x1(const Dense& p) {
  Dense r = Dense::zero(static_cast<int>(p.c.size()) - 1, static_cast<int>(p.c[0].size()) - 1);
  for (size_t i = 1; i < p.c.size(); ++i)
    for (size_t j = 0; j < p.c[i].size(); ++j)
      if (i - 1 < r.c.size() && j < r.c[i - 1].size())
        r.c[i - 1][j] = Rational(static_cast<long>(i)) * p.c[i][j];
  return r;
}

inline Dense diff_x2(const Dense& p) {
  Dense r = Dense::zero(static_cast<int>(p.c.size()) - 1, static_cast<int>(p.c[0].size()) - 1);
  for (size_t i = 0; i < p.c.size(); ++i)
    for (size_t j = 1; j < p.c[i].size(); ++j)
      if (i < r.c.size() && j - 1 < r.c[i].size())
        r.c[i][j - 1] = Rational(static_cast<long>(j)) * p.c[i][j];
  return r;
}

inline Dense mul(const Dense& a, const Dense& b) {
  Dense r = Dense::zero(static_cast<int>(a.c.size() + b.c.size()),
                        static_cast<int>(a.c[0].size() + b.c[0].size()));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < a.c[i].size(); ++j)
      for (size_t k = 0; k < b.c.size(); ++k)
        for (size_t l = 0; l < b.c[k].size(); ++l)
          r.c[i + k][j + l] += a.c[i][j] * b.c[k][l];
  return r;
}

// independent transvectant: the literal Grace-Young expression
inline mysticum::BinaryForm<Rational> transvectant(const mysticum::BinaryForm<Rational>& f,
                                                   const mysticum::BinaryForm<Rational>& g,
                                                   int r) {
  using mysticum::binomial;
  using mysticum::factorial_ratio;
  int m = f.degree(), n = g.degree();
  Dense acc = Dense::zero(m + n, m + n);
  for (int k = 0; k <= r; ++k) {
    Dense df = from_form(f), dg = from_form(g);
    for (int t = 0; t < r - k; ++t) df = diff_x1(df);
    for (int t = 0; t < k; ++t) df = diff_x2(df);
    for (int t = 0; t < k; ++t) dg = diff_x1(dg);
    for (int t = 0; t < r - k; ++t) dg = diff_x2(dg);
    Dense prod = mul(df, dg);
    Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
    Rational coef = sign * Rational(binomial(r, k));
    for (size_t i = 0; i < prod.c.size() && i < acc.c.size(); ++i)
      for (size_t j = 0; j < prod.c[i].size() && j < acc.c[i].size(); ++j)
        acc.c[i][j] += coef * prod.c[i][j];
  }
  Rational pref = factorial_ratio(m - r, m) * factorial_ratio(n - r, n);
  int out_deg = m + n - 2 * r;
  mysticum::BinaryForm<Rational> out(out_deg);
  for (int i = 0; i <= out_deg; ++i) out.coeff(i) = pref * acc.at(out_deg - i, i);
  return out;
}

}  // namespace oracle

namespace testgen {

using mysticum::GaussianRational;
using mysticum::Rational;

inline Rational rational(std::mt19937_64& rng, int span = 20, int den_max = 6) {
  std::uniform_int_distribution<int> num(-span, span), den(1, den_max);
  return Rational(num(rng), den(rng));
}

inline Rational nonzero_rational(std::mt19937_64& rng, int span = 20, int den_max = 6) {
  Rational r;
  do {
    r = rational(rng, span, den_max);
  } while (r.is_zero());
  return r;
}

inline GaussianRational gaussian(std::mt19937_64& rng, int span = 12) {
  return GaussianRational(rational(rng, span), rational(rng, span));
}

inline mysticum::BinaryForm<Rational> form(std::mt19937_64& rng, int degree) {
  std::vector<Rational> cs;
  for (int i = 0; i <= degree; ++i) cs.push_back(rational(rng));
  mysticum::BinaryForm<Rational> f(std::move(cs));
  if (f.is_zero()) f.coeff(0) = Rational(1);
  return f;
}

inline std::array<mysticum::P1Point<Rational>, 6> distinct_points(std::mt19937_64& rng) {
  std::array<mysticum::P1Point<Rational>, 6> pts;
  while (true) {
    bool ok = true;
    for (int i = 0; i < 6; ++i) pts[i] = mysticum::P1Point<Rational>(rational(rng, 30, 7));
    for (int i = 0; i < 6 && ok; ++i)
      for (int j = i + 1; j < 6 && ok; ++j)
        if (pts[i] == pts[j]) ok = false;
    if (ok) return pts;
  }
}

}  // namespace testgen
