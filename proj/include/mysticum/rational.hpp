#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "mysticum/errors.hpp"

namespace mysticum {

using Integer = mpz_class;

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Thin value wrapper over GMP that keeps the canonical-form
// invariant on every path, including construction from raw num/den.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}            // NOLINT: implicit by design
  Rational(long n) : q_(static_cast<signed long>(n)) {}
  Rational(const Integer& n) : q_(n) {}
  Rational(const Integer& num, const Integer& den) : q_(num, den) {
    require(sgn(den) != 0, "Rational: zero denominator");
    q_.canonicalize();
  }
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  // Accepts "n" or "n/d" with arbitrary-precision parts.
  static Rational from_string(const std::string& s);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(-q_); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    require(!o.is_zero(), "Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  Rational inverse() const {
    require(!is_zero(), "Rational: inverse of zero");
    return Rational(denominator(), numerator());
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const { return q_.get_d(); }

  std::string str() const;

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational factorial_ratio(int num_fact, int den_fact) {
  // num_fact! / den_fact!  as an exact rational
  Integer n(1), d(1);
  for (int i = 2; i <= num_fact; ++i) n *= i;
  for (int i = 2; i <= den_fact; ++i) d *= i;
  return Rational(n, d);
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline bool is_zero(const Rational& r) { return r.is_zero(); }

namespace detail {
// ADL trampoline usable inside class templates, where an unqualified
// is_zero would be hidden by the member of the same name
template <class T>
bool scalar_is_zero(const T& x) {
  return is_zero(x);
}
}  // namespace detail

}  // namespace mysticum
