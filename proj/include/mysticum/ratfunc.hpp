#pragma once

#include <string>
#include <utility>

#include "mysticum/unipoly.hpp"

namespace mysticum {

// Univariate rational function over a field K, kept reduced: the
// denominator is monic and coprime to the numerator. Together with
// UniPoly this provides the function fields Q(p), Q(i)(p).
template <class K>
class RatFunc {
 public:
  RatFunc() : num_(""), den_(K(1), "") {}
  RatFunc(K constant) : num_(std::move(constant), ""), den_(K(1), "") {}  // NOLINT
  RatFunc(int n) : RatFunc(K(n)) {}                                         // NOLINT
  RatFunc(UniPoly<K> p) : num_(std::move(p)), den_(K(1), num_.var()) {}     // NOLINT
  RatFunc(UniPoly<K> num, UniPoly<K> den) : num_(std::move(num)), den_(std::move(den)) {
    require(!den_.is_zero(), "RatFunc: zero denominator");
    reduce();
  }

  static RatFunc variable(const std::string& var) { return RatFunc(UniPoly<K>::variable(var)); }

  const UniPoly<K>& num() const { return num_; }
  const UniPoly<K>& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  K constant_value() const { return num_.constant_value(); }

  RatFunc operator-() const { return RatFunc(-num_, den_, nullptr); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    require(!b.is_zero(), "RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  // Canonical-form equality; agrees with cross-multiplied equality.
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc inverse() const {
    require(!is_zero(), "RatFunc: inverse of zero");
    return RatFunc(den_, num_);
  }

  // Substitute a field value for the variable; the denominator must not
  // vanish there.
  K evaluate(const K& x) const {
    K d = den_.evaluate(x);
    require(!detail::scalar_is_zero(d), "RatFunc: pole at evaluation point");
    return num_.evaluate(x) / d;
  }

  std::string str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
  }

 private:
  RatFunc(UniPoly<K> num, UniPoly<K> den, std::nullptr_t) : num_(std::move(num)), den_(std::move(den)) {}

  void reduce() {
    if (num_.is_zero()) {
      den_ = UniPoly<K>(K(1), den_.var());
      return;
    }
    UniPoly<K> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    K lead_inv = K(1) / den_.leading();
    num_ = lead_inv * num_;
    den_ = lead_inv * den_;
  }

  UniPoly<K> num_;
  UniPoly<K> den_;
};

template <class K>
bool is_zero(const RatFunc<K>& f) {
  return f.is_zero();
}

}  // namespace mysticum
