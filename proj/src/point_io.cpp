#include "mysticum/point_io.hpp"

#include <sstream>

namespace mysticum {

namespace {

// rational literal: [+-]digits[/digits]
size_t scan_rational(const std::string& s, size_t pos, Rational& out) {
  size_t i = pos;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  size_t digits_start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == digits_start) throw PointParseError("expected digits in '" + s + "'");
  if (i < s.size() && s[i] == '/') {
    ++i;
    size_t den_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == den_start) throw PointParseError("expected denominator in '" + s + "'");
  }
  out = Rational::from_string(s.substr(pos, i - pos));
  return i;
}

}  // namespace

P1Point<GaussianRational> parse_point(const std::string& text) {
  if (text == "inf" || text == "oo") return P1Point<GaussianRational>::infinity();
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw PointParseError("empty point literal");

  Rational re(0), im(0);
  size_t i = 0;

  // leading "i" / "-i" / "+i"
  auto try_bare_i = [&](size_t j) -> bool {
    int sign = 1;
    size_t k = j;
    if (k < s.size() && (s[k] == '+' || s[k] == '-')) {
      if (s[k] == '-') sign = -1;
      ++k;
    }
    if (k < s.size() && s[k] == 'i' && k + 1 == s.size()) {
      im += Rational(sign);
      i = k + 1;
      return true;
    }
    return false;
  };

  if (try_bare_i(0)) return P1Point<GaussianRational>(GaussianRational(re, im));

  Rational first;
  i = scan_rational(s, 0, first);
  if (i < s.size() && (s[i] == '*' || s[i] == 'i')) {
    // pure imaginary "c*i" or "ci"
    if (s[i] == '*') ++i;
    if (i >= s.size() || s[i] != 'i' || i + 1 != s.size())
      throw PointParseError("malformed imaginary part in '" + text + "'");
    return P1Point<GaussianRational>(GaussianRational(Rational(0), first));
  }
  re = first;
  if (i == s.size()) return P1Point<GaussianRational>(GaussianRational(re, Rational(0)));

  if (s[i] != '+' && s[i] != '-')
    throw PointParseError("malformed point literal '" + text + "'");
  if (try_bare_i(i)) return P1Point<GaussianRational>(GaussianRational(re, im));
  Rational second;
  size_t j = scan_rational(s, i, second);
  if (j >= s.size() || (s[j] != '*' && s[j] != 'i'))
    throw PointParseError("expected '*i' in '" + text + "'");
  if (s[j] == '*') ++j;
  if (j >= s.size() || s[j] != 'i' || j + 1 != s.size())
    throw PointParseError("trailing characters in '" + text + "'");
  im = second;
  return P1Point<GaussianRational>(GaussianRational(re, im));
}

std::string print_scalar(const GaussianRational& z) { return z.str(); }

std::string print_point(const P1Point<GaussianRational>& p) {
  if (p.is_infinity()) return "inf";
  return print_scalar(p.affine());
}

std::optional<P1Point<Rational>> as_rational_point(const P1Point<GaussianRational>& p) {
  if (p.is_infinity()) return P1Point<Rational>::infinity();
  if (!p.affine().is_real()) return std::nullopt;
  return P1Point<Rational>(p.affine().real());
}

namespace {

template <class K, class IntegralizeFn, class SignFn>
std::string serialize_quadratic_impl(const BinaryForm<K>& f, IntegralizeFn integralize,
                                     SignFn needs_flip) {
  require(f.degree() == 2, "serialize_quadratic: quadratic form required");
  if (f.is_zero()) return "0,0,0";
  std::vector<K> cs = f.coeffs();
  integralize(cs);
  for (const auto& c : cs) {
    if (is_zero(c)) continue;
    if (needs_flip(c))
      for (auto& x : cs) x = -x;
    break;
  }
  std::ostringstream os;
  for (int i = 0; i < 3; ++i) {
    if (i) os << ",";
    os << cs[i];
  }
  return os.str();
}

}  // namespace

std::string serialize_quadratic(const BinaryForm<Rational>& f) {
  return serialize_quadratic_impl<Rational>(
      f,
      [](std::vector<Rational>& cs) {
        Integer num_gcd = 0, den_lcm = 1;
        for (const auto& c : cs) {
          mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
          mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
        }
        Rational content(num_gcd, den_lcm);
        for (auto& c : cs) c /= content;
      },
      [](const Rational& c) { return c.sign() < 0; });
}

std::string serialize_quadratic(const BinaryForm<GaussianRational>& f) {
  return serialize_quadratic_impl<GaussianRational>(
      f,
      [](std::vector<GaussianRational>& cs) {
        Integer num_gcd = 0, den_lcm = 1;
        for (const auto& c : cs)
          for (const Rational& part : {c.real(), c.imag()}) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), part.numerator().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), part.denominator().get_mpz_t());
          }
        GaussianRational content(Rational(num_gcd, den_lcm));
        for (auto& c : cs) c /= content;
      },
      [](const GaussianRational& c) {
        if (!c.real().is_zero()) return c.real().sign() < 0;
        return c.imag().sign() < 0;
      });
}

}  // namespace mysticum
