#pragma once

#include <map>
#include <optional>

#include "mysticum/covariants.hpp"
#include "mysticum/point_io.hpp"

namespace mysticum {

class CoincidentPointsError : public domain_error {
 public:
  CoincidentPointsError() : domain_error("analyze: the six points must be distinct") {}
};

// Everything the analyze command reports about one sextuple: the full
// configuration audit, both tri-involutivity detectors, and the defined
// Cayley-Salmon lines in canonical serialized form.
struct SextupleAnalysis {
  std::array<P1Point<GaussianRational>, 6> points;
  bool all_real = false;
  ConfigurationReport config;
  int alignment_count = 0;          // definition-level detector
  bool tri_involutive = false;      // alignment count > 0
  bool theta54_vanishes = false;    // covariant detector, must agree
  std::map<std::string, std::optional<std::string>> g_lines;  // "123" -> "c0,c1,c2"
};

SextupleAnalysis analyze_sextuple(const std::array<P1Point<GaussianRational>, 6>& pts);

}  // namespace mysticum
