#pragma once

#include <string>

#include "mysticum/triinv.hpp"

namespace mysticum {

class NonRealPointError : public domain_error {
 public:
  NonRealPointError() : domain_error("render: all six points must be real rationals") {}
};

// Static SVG figure: the conic as the unit circle under the stereographic
// map z -> ((1-z^2)/(1+z^2), 2z/(1+z^2)), the six labeled points, and, for
// a tri-involutive sextuple, the three concurrent chord triples with their
// centers Q4, Q5, Q6 and the line through them. Output is deterministic
// for fixed input (1000 x 1000 viewbox).
std::string render_sextuple_svg(const std::array<P1Point<Rational>, 6>& points);

}  // namespace mysticum
