#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mysticum/errors.hpp"
#include "mysticum/rational.hpp"

namespace mysticum {

class NotDivisibleError : public domain_error {
 public:
  NotDivisibleError() : domain_error("MultiPoly: no exact quotient exists") {}
};

class UnknownVariableError : public domain_error {
 public:
  explicit UnknownVariableError(const std::string& v)
      : domain_error("MultiPoly: unknown variable '" + v + "'") {}
};

// Exponent vector over at most 8 named variables.
struct Monomial {
  std::array<uint8_t, 8> e{};

  int degree() const {
    int d = 0;
    for (uint8_t x : e) d += x;
    return d;
  }
  bool divides(const Monomial& m) const {
    for (int i = 0; i < 8; ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }
  friend Monomial operator+(Monomial a, const Monomial& b) {
    for (int i = 0; i < 8; ++i) a.e[i] = static_cast<uint8_t>(a.e[i] + b.e[i]);
    return a;
  }
  friend Monomial operator-(Monomial a, const Monomial& b) {
    for (int i = 0; i < 8; ++i) a.e[i] = static_cast<uint8_t>(a.e[i] - b.e[i]);
    return a;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

// Graded lexicographic order with earlier-listed variables smaller
// (a < b < ... < f). Any fixed total order makes exact division
// deterministic; this one is pinned for reproducible output.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (int i = 7; i >= 0; --i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
  }
};

using VarList = std::vector<std::string>;
using VarsPtr = std::shared_ptr<const VarList>;

// Shared variable universes used across the project.
VarsPtr letter_vars();       // a b c d e f
VarsPtr sextic_coeff_vars(); // a0 ... a6

// Sparse multivariate polynomial with exact rational coefficients over a
// fixed ordered list of variables. Constants may carry an empty variable
// list; binary operations unify a constant with the other operand's
// universe and otherwise require identical universes.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(int n) : MultiPoly(Rational(n)) {}  // NOLINT: implicit by design
  MultiPoly(Rational c) {                       // NOLINT
    if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
  }

  static MultiPoly zero(VarsPtr vars) {
    MultiPoly p;
    p.vars_ = std::move(vars);
    return p;
  }
  static MultiPoly constant(Rational c, VarsPtr vars) {
    MultiPoly p(std::move(c));
    p.vars_ = std::move(vars);
    return p;
  }
  static MultiPoly variable(const std::string& name, VarsPtr vars);
  static MultiPoly from_terms(std::vector<std::pair<Monomial, Rational>> terms, VarsPtr vars);

  const VarsPtr& vars() const { return vars_; }
  int var_count() const { return vars_ ? static_cast<int>(vars_->size()) : 0; }
  int var_index(const std::string& name) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
  }
  Rational constant_value() const {
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }
  size_t term_count() const { return terms_.size(); }
  int total_degree() const {  // -1 for the zero polynomial
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }
  int degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max<int>(d, m.e[var]);
    return d;
  }
  bool is_homogeneous() const;

  const std::map<Monomial, Rational, GrlexLess>& terms() const { return terms_; }
  std::pair<Monomial, Rational> leading_term() const {
    require(!is_zero(), "MultiPoly: leading term of zero");
    return *terms_.rbegin();
  }

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& s, const MultiPoly& p);
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  // *this += c * o, in place
  void add_scaled(const Rational& c, const MultiPoly& o);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  std::string str() const;

 private:
  void insert_term(const Monomial& m, const Rational& c);
  static VarsPtr unify(const MultiPoly& a, const MultiPoly& b);

  VarsPtr vars_;  // null for bare constants
  std::map<Monomial, Rational, GrlexLess> terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

// Exact quotient in the fixed monomial order; throws NotDivisibleError when
// none exists.
MultiPoly mpoly_exact_div(const MultiPoly& dividend, const MultiPoly& divisor);

// Simultaneous variable renaming along a bijection of the universe, given
// as image indices: variable i becomes variable sigma[i].
MultiPoly mpoly_substitute_vars(const MultiPoly& p, const std::vector<int>& sigma);

// Name-based flavour; sigma maps variable names to variable names.
MultiPoly mpoly_letter_substitute(const MultiPoly& p,
                                  const std::vector<std::pair<std::string, std::string>>& sigma);

struct StripResult {
  MultiPoly stripped;
  std::vector<std::pair<int, int>> removed;  // variable-index pairs (i, j) for factor x_i - x_j
};

// Removes every exactly-dividing variable difference (x - y) and the
// rational content; the result is primitive with positive leading
// coefficient and divisible by no variable difference.
StripResult strip_difference_content(const MultiPoly& p);

// Divides out rational content only; positive leading coefficient.
MultiPoly mpoly_primitive(const MultiPoly& p);

// Proportionality by cross-multiplied leading terms, then exact equality.
bool mpoly_proportional(const MultiPoly& p, const MultiPoly& q);

// Substitutes values[i] for variable i. K must be a commutative ring
// constructible from int with Rational scaling via scale_by_rational.
template <class K>
K mpoly_evaluate(const MultiPoly& p, const std::vector<K>& values);

// --- scale_by_rational customization points -------------------------------

inline Rational scale_by_rational(const Rational& x, const Rational& c) { return x * c; }
inline MultiPoly scale_by_rational(const MultiPoly& x, const Rational& c) { return c * x; }

template <class K>
K mpoly_evaluate(const MultiPoly& p, const std::vector<K>& values) {
  require(static_cast<int>(values.size()) == p.var_count() || p.is_constant(),
          "mpoly_evaluate: wrong number of values");
  // power tables keep this at one multiplication per (term, variable)
  std::vector<std::vector<K>> pow(values.size());
  for (size_t v = 0; v < values.size(); ++v) {
    int d = p.degree_in(static_cast<int>(v));
    pow[v].reserve(d + 1);
    pow[v].push_back(K(1));
    for (int k = 1; k <= d; ++k) pow[v].push_back(pow[v].back() * values[v]);
  }
  K acc(0);
  for (const auto& [m, c] : p.terms()) {
    K t(1);
    for (size_t v = 0; v < values.size(); ++v)
      if (m.e[v] > 0) t = t * pow[v][m.e[v]];
    acc = acc + scale_by_rational(t, c);
  }
  return acc;
}

}  // namespace mysticum
