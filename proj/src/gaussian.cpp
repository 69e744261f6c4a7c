#include "mysticum/gaussian.hpp"

#include <ostream>
#include <sstream>

namespace mysticum {

std::string GaussianRational::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  if (z.imag().is_zero()) return os << z.real();
  if (!z.real().is_zero()) {
    os << z.real();
    if (z.imag().sign() > 0) os << "+";
  }
  if (z.imag() == Rational(1))
    os << "i";
  else if (z.imag() == Rational(-1))
    os << "-i";
  else
    os << z.imag() << "*i";
  return os;
}

}  // namespace mysticum
