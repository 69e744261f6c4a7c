#pragma once

#include <json.hpp>

#include "mysticum/analysis.hpp"
#include "mysticum/extensions.hpp"

namespace mysticum {

// machine-readable report, schema "mysticum/1", deterministic field order
nlohmann::ordered_json report_json(const SextupleAnalysis& a);
std::string report_text(const SextupleAnalysis& a, bool csc_only, bool alignments_only);

nlohmann::ordered_json extensions_json(const ExtensionSet<GaussianRational>& ext);
std::string extensions_text(const ExtensionSet<GaussianRational>& ext);

}  // namespace mysticum
