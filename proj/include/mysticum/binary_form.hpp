#pragma once

#include <complex>
#include <sstream>
#include <string>
#include <vector>

#include "mysticum/errors.hpp"
#include "mysticum/gaussian.hpp"
#include "mysticum/multipoly.hpp"
#include "mysticum/ratfunc.hpp"
#include "mysticum/unipoly.hpp"

namespace mysticum {

class DegreeMismatchError : public domain_error {
 public:
  explicit DegreeMismatchError(const char* what) : domain_error(what) {}
};

class ZeroFormError : public domain_error {
 public:
  ZeroFormError() : domain_error("BinaryForm: zero form where nonzero required") {}
};

// remaining scale_by_rational instances for coefficient rings of forms
inline GaussianRational scale_by_rational(const GaussianRational& x, const Rational& c) {
  return x * GaussianRational(c);
}
template <class K>
UniPoly<K> scale_by_rational(const UniPoly<K>& p, const Rational& c) {
  std::vector<K> cs = p.coeffs();
  for (auto& x : cs) x = scale_by_rational(x, c);
  return UniPoly<K>(std::move(cs), p.var());
}
template <class K>
RatFunc<K> scale_by_rational(const RatFunc<K>& f, const Rational& c) {
  return RatFunc<K>(scale_by_rational(f.num(), c), f.den());
}
inline std::complex<double> scale_by_rational(const std::complex<double>& x, const Rational& c) {
  return x * c.to_double();
}
inline bool is_zero(const std::complex<double>& z) { return z == std::complex<double>(0.0); }

// Binary form of fixed degree n over a commutative ring R:
//   sum_i c[i] * x1^(n-i) * x2^i         (plain, unweighted coefficients).
// The identically-zero form of any degree is representable; several
// geometric constructions use it as a meaningful "undefined" marker.
template <class R>
class BinaryForm {
 public:
  BinaryForm() : c_(1, R(0)) {}
  explicit BinaryForm(int degree) : c_(degree + 1, R(0)) {}
  BinaryForm(std::vector<R> coeffs) : c_(std::move(coeffs)) {  // NOLINT
    require(!c_.empty(), "BinaryForm: empty coefficient list");
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<R>& coeffs() const { return c_; }
  const R& coeff(int i) const { return c_[i]; }
  R& coeff(int i) { return c_[i]; }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!::mysticum::is_zero(c)) return false;
    return true;
  }

  BinaryForm operator-() const {
    BinaryForm r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    if (a.degree() != b.degree()) throw DegreeMismatchError("BinaryForm: sum of unequal degrees");
    BinaryForm r = a;
    for (int i = 0; i <= b.degree(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
    return r;
  }
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + (-b); }
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    BinaryForm r(a.degree() + b.degree());
    for (int i = 0; i <= a.degree(); ++i)
      for (int j = 0; j <= b.degree(); ++j) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    return r;
  }
  friend BinaryForm operator*(const R& s, const BinaryForm& f) {
    BinaryForm r = f;
    for (auto& c : r.c_) c = s * c;
    return r;
  }

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.c_ == b.c_; }
  friend bool operator!=(const BinaryForm& a, const BinaryForm& b) { return !(a == b); }

  BinaryForm scaled_by_rational(const Rational& s) const {
    BinaryForm r = *this;
    for (auto& c : r.c_) c = scale_by_rational(c, s);
    return r;
  }

  // partial derivative in x1 resp. x2; degree drops by one
  BinaryForm d1() const {
    int n = degree();
    require(n >= 1, "BinaryForm: derivative of a constant");
    BinaryForm r(n - 1);
    for (int i = 0; i + 1 <= n; ++i) r.c_[i] = scale_by_rational(c_[i], Rational(n - i));
    return r;
  }
  BinaryForm d2() const {
    int n = degree();
    require(n >= 1, "BinaryForm: derivative of a constant");
    BinaryForm r(n - 1);
    for (int i = 1; i <= n; ++i) r.c_[i - 1] = scale_by_rational(c_[i], Rational(i));
    return r;
  }

  // evaluate at (x1, x2)
  R evaluate(const R& x1, const R& x2) const {
    int n = degree();
    R acc(0);
    std::vector<R> p1(n + 1, R(1)), p2(n + 1, R(1));
    for (int k = 1; k <= n; ++k) {
      p1[k] = p1[k - 1] * x1;
      p2[k] = p2[k - 1] * x2;
    }
    for (int i = 0; i <= n; ++i) acc = acc + c_[i] * p1[n - i] * p2[i];
    return acc;
  }

  std::string str(const std::string& x1 = "x1", const std::string& x2 = "x2") const;

 private:
  std::vector<R> c_;
};

template <class R>
bool is_zero(const BinaryForm<R>& f) {
  return f.is_zero();
}

// r-th iterated partial derivative: d^r f / dx1^(r-k) dx2^k.
template <class R>
BinaryForm<R> iterated_partial(BinaryForm<R> f, int r, int k) {
  for (int i = 0; i < r - k; ++i) f = f.d1();
  for (int i = 0; i < k; ++i) f = f.d2();
  return f;
}

// Classical transvectant with the Grace-Young factorial normalization:
//   (f,g)_r = ((m-r)! (n-r)!)/(m! n!) *
//             sum_k (-1)^k C(r,k) d^r f/dx1^(r-k)dx2^k * d^r g/dx1^k dx2^(r-k)
// Bilinear, with (f,g)_r = (-1)^r (g,f)_r. The normalization is pinned by
// the identity ((x1-3x2)^2, x2^2)_1 = x2(x1-3x2).
template <class R>
BinaryForm<R> transvectant(const BinaryForm<R>& f, const BinaryForm<R>& g, int r) {
  int m = f.degree(), n = g.degree();
  if (r < 0 || r > m || r > n)
    throw DegreeMismatchError("transvectant: index exceeds a degree");
  BinaryForm<R> acc(m + n - 2 * r);
  for (int k = 0; k <= r; ++k) {
    BinaryForm<R> t = iterated_partial(f, r, k) * iterated_partial(g, r, r - k);
    Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
    acc = acc + t.scaled_by_rational(sign * Rational(binomial(r, k)));
  }
  Rational pref = factorial_ratio(m - r, m) * factorial_ratio(n - r, n);
  return acc.scaled_by_rational(pref);
}

// Projective equality: all 2x2 minors of the coefficient vectors vanish.
// Requires equal degrees and both forms nonzero.
template <class R>
bool proportional(const BinaryForm<R>& f, const BinaryForm<R>& g) {
  if (f.degree() != g.degree())
    throw DegreeMismatchError("proportional: degrees differ");
  if (f.is_zero() || g.is_zero()) throw ZeroFormError();
  int n = f.degree();
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!::mysticum::is_zero(f.coeff(i) * g.coeff(j) - f.coeff(j) * g.coeff(i))) return false;
  return true;
}

// Substitute x1 -> p x1 + q x2, x2 -> r x1 + s x2 with rational entries.
template <class R>
BinaryForm<R> form_substitute(const BinaryForm<R>& f, const Rational& p, const Rational& q,
                              const Rational& r, const Rational& s) {
  int n = f.degree();
  // powers of the two substituted linear forms
  std::vector<BinaryForm<R>> pow1, pow2;
  BinaryForm<R> l1({scale_by_rational(R(1), p), scale_by_rational(R(1), q)});
  BinaryForm<R> l2({scale_by_rational(R(1), r), scale_by_rational(R(1), s)});
  pow1.push_back(BinaryForm<R>({R(1)}));
  pow2.push_back(BinaryForm<R>({R(1)}));
  for (int k = 1; k <= n; ++k) {
    pow1.push_back(pow1.back() * l1);
    pow2.push_back(pow2.back() * l2);
  }
  BinaryForm<R> acc(n);
  for (int i = 0; i <= n; ++i) {
    if (::mysticum::is_zero(f.coeff(i))) continue;
    acc = acc + f.coeff(i) * (pow1[n - i] * pow2[i]);
  }
  return acc;
}

// The generic binary sextic F = sum_i a_i C(6,i) x1^(6-i) x2^i over the
// polynomial ring Q[a0..a6].
inline BinaryForm<MultiPoly> generic_sextic() {
  VarsPtr vars = sextic_coeff_vars();
  std::vector<MultiPoly> coeffs;
  coeffs.reserve(7);
  for (int i = 0; i <= 6; ++i) {
    coeffs.push_back(Rational(binomial(6, i)) * MultiPoly::variable((*vars)[i], vars));
  }
  return BinaryForm<MultiPoly>(std::move(coeffs));
}

template <class R>
std::string BinaryForm<R>::str(const std::string& x1, const std::string& x2) const {
  std::ostringstream os;
  bool first = true;
  int n = degree();
  for (int i = 0; i <= n; ++i) {
    if (::mysticum::is_zero(c_[i])) continue;
    if (!first) os << " + ";
    os << "(" << c_[i] << ")";
    if (n - i > 0) os << "*" << x1 << (n - i > 1 ? "^" + std::to_string(n - i) : "");
    if (i > 0) os << "*" << x2 << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace mysticum
