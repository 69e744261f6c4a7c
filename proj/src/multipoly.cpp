#include "mysticum/multipoly.hpp"

#include <algorithm>

#include <ostream>
#include <sstream>

namespace mysticum {

VarsPtr letter_vars() {
  static const VarsPtr v = std::make_shared<VarList>(VarList{"a", "b", "c", "d", "e", "f"});
  return v;
}

VarsPtr sextic_coeff_vars() {
  static const VarsPtr v =
      std::make_shared<VarList>(VarList{"a0", "a1", "a2", "a3", "a4", "a5", "a6"});
  return v;
}

MultiPoly MultiPoly::variable(const std::string& name, VarsPtr vars) {
  MultiPoly p;
  p.vars_ = std::move(vars);
  int idx = p.var_index(name);
  if (idx < 0) throw UnknownVariableError(name);
  Monomial m;
  m.e[idx] = 1;
  p.terms_.emplace(m, Rational(1));
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<std::pair<Monomial, Rational>> terms, VarsPtr vars) {
  MultiPoly p;
  p.vars_ = std::move(vars);
  for (auto& [m, c] : terms) p.insert_term(m, c);
  return p;
}

int MultiPoly::var_index(const std::string& name) const {
  if (!vars_) return -1;
  for (size_t i = 0; i < vars_->size(); ++i)
    if ((*vars_)[i] == name) return static_cast<int>(i);
  return -1;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

void MultiPoly::insert_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

VarsPtr MultiPoly::unify(const MultiPoly& a, const MultiPoly& b) {
  if (!a.vars_) return b.vars_;
  if (!b.vars_) return a.vars_;
  require(a.vars_ == b.vars_ || *a.vars_ == *b.vars_,
          "MultiPoly: mixed variable universes");
  return a.vars_;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  vars_ = unify(*this, o);
  for (const auto& [m, c] : o.terms_) insert_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  vars_ = unify(*this, o);
  for (const auto& [m, c] : o.terms_) insert_term(m, -c);
  return *this;
}

void MultiPoly::add_scaled(const Rational& c, const MultiPoly& o) {
  if (c.is_zero()) return;
  vars_ = unify(*this, o);
  for (const auto& [m, oc] : o.terms_) insert_term(m, c * oc);
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  r += b;
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  r -= b;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  r.vars_ = MultiPoly::unify(a, b);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  // accumulate into a flat vector, then sort and combine; much faster than
  // per-insert map lookups for the large symbolic products
  std::vector<std::pair<Monomial, Rational>> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) acc.emplace_back(ma + mb, ca * cb);
  GrlexLess less;
  std::sort(acc.begin(), acc.end(),
            [&](const auto& x, const auto& y) { return less(x.first, y.first); });
  auto hint = r.terms_.end();
  for (size_t i = 0; i < acc.size();) {
    Rational sum = std::move(acc[i].second);
    size_t j = i + 1;
    while (j < acc.size() && acc[j].first == acc[i].first) {
      sum += acc[j].second;
      ++j;
    }
    if (!sum.is_zero()) hint = r.terms_.emplace_hint(hint, acc[i].first, std::move(sum));
    i = j;
  }
  return r;
}

MultiPoly operator*(const Rational& s, const MultiPoly& p) {
  if (s.is_zero()) return MultiPoly::zero(p.vars());
  MultiPoly r = p;
  for (auto& [m, c] : r.terms_) c *= s;
  return r;
}

MultiPoly mpoly_exact_div(const MultiPoly& dividend, const MultiPoly& divisor) {
  require(!divisor.is_zero(), "mpoly_exact_div: zero divisor");
  MultiPoly q = MultiPoly::zero(dividend.vars() ? dividend.vars() : divisor.vars());
  MultiPoly r = dividend;
  auto [lm, lc] = divisor.leading_term();
  while (!r.is_zero()) {
    auto [rm, rc] = r.leading_term();
    if (!lm.divides(rm)) throw NotDivisibleError();
    Monomial qm = rm - lm;
    Rational qc = rc / lc;
    q += MultiPoly::from_terms({{qm, qc}}, q.vars());
    // r -= qc * x^qm * divisor, in place
    MultiPoly shifted = MultiPoly::from_terms({{qm, Rational(1)}}, q.vars()) * divisor;
    r.add_scaled(-qc, shifted);
  }
  return q;
}

MultiPoly mpoly_substitute_vars(const MultiPoly& p, const std::vector<int>& sigma) {
  require(static_cast<int>(sigma.size()) == p.var_count(),
          "mpoly_substitute_vars: permutation size mismatch");
  std::vector<bool> seen(sigma.size(), false);
  for (int s : sigma) {
    require(s >= 0 && s < static_cast<int>(sigma.size()) && !seen[s],
            "mpoly_substitute_vars: not a bijection");
    seen[s] = true;
  }
  std::vector<std::pair<Monomial, Rational>> terms;
  terms.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) {
    Monomial m2;
    for (size_t i = 0; i < sigma.size(); ++i) m2.e[sigma[i]] = m.e[i];
    terms.emplace_back(m2, c);
  }
  return MultiPoly::from_terms(std::move(terms), p.vars());
}

MultiPoly mpoly_letter_substitute(const MultiPoly& p,
                                  const std::vector<std::pair<std::string, std::string>>& sigma) {
  std::vector<int> images(p.var_count());
  for (int i = 0; i < p.var_count(); ++i) images[i] = i;
  for (const auto& [from, to] : sigma) {
    int i = p.var_index(from), j = p.var_index(to);
    if (i < 0) throw UnknownVariableError(from);
    if (j < 0) throw UnknownVariableError(to);
    images[i] = j;
  }
  return mpoly_substitute_vars(p, images);
}

MultiPoly mpoly_primitive(const MultiPoly& p) {
  if (p.is_zero()) return p;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  if (p.leading_term().second.sign() < 0) content = -content;
  return content.inverse() * p;
}

StripResult strip_difference_content(const MultiPoly& p) {
  require(!p.is_zero(), "strip_difference_content: zero polynomial");
  StripResult res;
  res.stripped = mpoly_primitive(p);
  int n = p.var_count();
  bool changed = true;
  while (changed && !res.stripped.is_constant()) {
    changed = false;
    for (int i = 0; i < n && !changed; ++i) {
      for (int j = i + 1; j < n && !changed; ++j) {
        Monomial mi, mj;
        mi.e[i] = 1;
        mj.e[j] = 1;
        MultiPoly diff =
            MultiPoly::from_terms({{mi, Rational(1)}, {mj, Rational(-1)}}, p.vars());
        try {
          MultiPoly q = mpoly_exact_div(res.stripped, diff);
          res.stripped = std::move(q);
          res.removed.emplace_back(i, j);
          changed = true;
        } catch (const NotDivisibleError&) {
        }
      }
    }
  }
  res.stripped = mpoly_primitive(res.stripped);
  return res;
}

bool mpoly_proportional(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  auto [pm, pc] = p.leading_term();
  auto [qm, qc] = q.leading_term();
  if (!(pm == qm)) return false;
  return qc * p == pc * q;
}

std::string MultiPoly::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  // print highest term first
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    Rational ac = c.abs();
    bool has_vars = !(m == Monomial{});
    if (!has_vars || !ac.is_one()) os << ac;
    if (has_vars) {
      bool star = !ac.is_one();
      for (int v = 0; v < p.var_count(); ++v) {
        if (m.e[v] == 0) continue;
        if (star) os << "*";
        os << (*p.vars())[v];
        if (m.e[v] > 1) os << "^" << int(m.e[v]);
        star = true;
      }
    }
    first = false;
  }
  return os;
}

}  // namespace mysticum
