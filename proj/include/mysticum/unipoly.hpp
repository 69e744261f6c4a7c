#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mysticum/errors.hpp"
#include "mysticum/rational.hpp"

namespace mysticum {

// Univariate polynomial over a field K, coefficients stored lowest degree
// first with a nonzero leading coefficient (the zero polynomial has an
// empty coefficient list). The variable name is carried along so that
// printed values read like the formulas they came from.
template <class K>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::string var) : var_(std::move(var)) {}
  UniPoly(K constant, std::string var = "") : var_(std::move(var)) {
    if (!detail::scalar_is_zero(constant)) c_.push_back(std::move(constant));
  }
  UniPoly(int constant) : UniPoly(K(constant)) {}  // NOLINT: implicit by design
  UniPoly(std::vector<K> coeffs, std::string var) : c_(std::move(coeffs)), var_(std::move(var)) {
    trim();
  }

  static UniPoly variable(const std::string& var) { return UniPoly({K(0), K(1)}, var); }
  static UniPoly constant(K v, const std::string& var) { return UniPoly(std::move(v), var); }

  const std::string& var() const { return var_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : K(0); }
  const K& leading() const { return c_.back(); }
  bool is_constant() const { return c_.size() <= 1; }
  K constant_value() const { return c_.empty() ? K(0) : c_[0]; }

  UniPoly operator-() const {
    UniPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r(a.pick_var(b));
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), K(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r(a.pick_var(b));
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, K(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }
  friend UniPoly operator*(const K& s, const UniPoly& p) {
    UniPoly r(p);
    for (auto& x : r.c_) x = s * x;
    r.trim();
    return r;
  }

  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  // Division with remainder; exact over the field of coefficients.
  friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    require(!b.is_zero(), "UniPoly: division by zero polynomial");
    UniPoly q(a.pick_var(b)), r = a;
    if (a.degree() < b.degree()) return {q, r};
    q.c_.assign(a.c_.size() - b.c_.size() + 1, K(0));
    K lead_inv = K(1) / b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int shift = r.degree() - b.degree();
      K factor = r.leading() * lead_inv;
      q.c_[shift] += factor;
      for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i + shift] -= factor * b.c_[i];
      r.trim();
    }
    q.trim();
    return {q, r};
  }

  UniPoly monic() const {
    require(!is_zero(), "UniPoly: monic of zero");
    K inv = K(1) / leading();
    return inv * *this;
  }

  K evaluate(const K& x) const {
    K acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      if (detail::scalar_is_zero(c_[i])) continue;
      if (!first) os << " + ";
      os << "(" << c_[i] << ")";
      if (i >= 1) os << "*" << var_;
      if (i >= 2) os << "^" << i;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && detail::scalar_is_zero(c_.back())) c_.pop_back();
  }
  std::string pick_var(const UniPoly& other) const {
    return var_.empty() ? other.var_ : var_;
  }

  std::vector<K> c_;
  std::string var_ = "";
};

template <class K>
bool is_zero(const UniPoly<K>& p) {
  return p.is_zero();
}

// Monic gcd by the Euclidean algorithm.
template <class K>
UniPoly<K> gcd(UniPoly<K> a, UniPoly<K> b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

}  // namespace mysticum
