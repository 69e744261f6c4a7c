#pragma once

#include <optional>
#include <string>

#include "mysticum/gaussian.hpp"
#include "mysticum/p1.hpp"

namespace mysticum {

class PointParseError : public std::runtime_error {
 public:
  explicit PointParseError(const std::string& what) : std::runtime_error(what) {}
};

// Textual point literals: "inf", integers, fractions "n/d", and Gaussian
// forms "a/b+c/d*i" (also "i", "-i", "3*i", "1-i"). parse/print round-trip
// losslessly.
P1Point<GaussianRational> parse_point(const std::string& text);
std::string print_point(const P1Point<GaussianRational>& p);
std::string print_scalar(const GaussianRational& z);

// real literals only; rejects nonzero imaginary parts
std::optional<P1Point<Rational>> as_rational_point(const P1Point<GaussianRational>& p);

// canonical integral form "c0,c1,c2": unit content, first nonzero
// coefficient positive (for Gaussian forms, positive real part or, failing
// that, positive imaginary part)
std::string serialize_quadratic(const BinaryForm<GaussianRational>& f);
std::string serialize_quadratic(const BinaryForm<Rational>& f);

}  // namespace mysticum
