#include "mysticum/rational.hpp"

#include <ostream>
#include <sstream>

namespace mysticum {

Rational Rational::from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(s));
    }
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw domain_error("Rational: cannot parse '" + s + "'");
  }
}

std::string Rational::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  os << r.numerator().get_str();
  if (r.denominator() != 1) os << '/' << r.denominator().get_str();
  return os;
}

}  // namespace mysticum
