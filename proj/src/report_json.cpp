#include "mysticum/report_json.hpp"

#include <sstream>

namespace mysticum {

namespace {

using json = nlohmann::ordered_json;

json profile_json(const IncidenceProfile& p) {
  json per_point = json::object(), per_line = json::object();
  for (const auto& [k, v] : p.per_point) per_point[std::to_string(k)] = v;
  for (const auto& [k, v] : p.per_line) per_line[std::to_string(k)] = v;
  return json{{"per_point", per_point},
              {"per_line", per_line},
              {"total", p.total_point_side},
              {"consistent", p.consistent()}};
}

const char* status_str(CscStatus s) {
  switch (s) {
    case CscStatus::conjugate: return "conjugate";
    case CscStatus::not_conjugate: return "not-conjugate";
    default: return "skipped-undefined";
  }
}

std::string complex_str(const Complex& z) {
  std::ostringstream os;
  os.precision(12);
  os << std::real(z);
  if (std::imag(z) >= 0) os << "+";
  os << std::imag(z) << "i";
  return os.str();
}

std::string cp1_str(const CP1& z) {
  // affine when well conditioned, otherwise "inf"-marked homogeneous pair
  if (std::abs(z.v) < 1e-14) return "inf";
  return complex_str(z.u / z.v);
}

}  // namespace

json report_json(const SextupleAnalysis& a) {
  json points = json::array();
  for (const auto& p : a.points) points.push_back(print_point(p));

  json csc_pairs = json::array();
  for (const auto& pr : a.config.csc_pairs)
    csc_pairs.push_back(json{{"alpha", pr.alpha.str()},
                             {"beta", pr.beta.str()},
                             {"status", status_str(pr.status)}});

  json undefined = json::array();
  for (const auto& t : a.config.undefined_cayley_salmon) undefined.push_back(t.str());

  json glines = json::object();
  for (const auto& [label, form] : a.g_lines)
    glines[label] = form ? json(*form) : json(nullptr);

  return json{
      {"schema", "mysticum/1"},
      {"points", points},
      {"field", a.all_real ? "Q" : "Q(i)"},
      {"distinct",
       json{{"pascal", a.config.distinct_pascal},
            {"steiner", a.config.distinct_steiner},
            {"kirkman", a.config.distinct_kirkman},
            {"cayley_salmon", a.config.distinct_cayley_salmon}}},
      {"incidence",
       json{{"kirkman_on_cs", profile_json(a.config.kirkman_on_cs)},
            {"kirkman_on_pascal", profile_json(a.config.kirkman_on_pascal)},
            {"steiner_on_pascal", profile_json(a.config.steiner_on_pascal)},
            {"steiner_on_cs", profile_json(a.config.steiner_on_cs)}}},
      {"general_position_profile", a.config.general_position_profile},
      {"von_staudt",
       json{{"checked", a.config.von_staudt_checked_pairs},
            {"conjugate", a.config.von_staudt_conjugate_pairs}}},
      {"csc",
       json{{"verdict", a.config.csc_all_defined_conjugate ? "passes" : "fails"},
            {"checked", a.config.csc_checked()},
            {"skipped", a.config.csc_skipped()},
            {"pairs", csc_pairs}}},
      {"tri_involutive", a.tri_involutive},
      {"theta54_vanishes", a.theta54_vanishes},
      {"alignments", a.alignment_count},
      {"g_lines",
       json{{"defined", a.config.defined_cayley_salmon},
            {"distinct_defined", a.config.distinct_cayley_salmon},
            {"undefined", undefined},
            {"forms", glines}}},
  };
}

std::string report_text(const SextupleAnalysis& a, bool csc_only, bool alignments_only) {
  std::ostringstream os;
  bool full = !csc_only && !alignments_only;
  os << "points:";
  for (const auto& p : a.points) os << " " << print_point(p);
  os << "\n";
  if (full) {
    os << "distinct elements: pascal " << a.config.distinct_pascal << ", steiner "
       << a.config.distinct_steiner << ", kirkman " << a.config.distinct_kirkman
       << ", cayley-salmon " << a.config.distinct_cayley_salmon << " ("
       << a.config.defined_cayley_salmon << " defined)\n";
    os << "general position profile: " << (a.config.general_position_profile ? "yes" : "no")
       << "\n";
    os << "von Staudt conjugate pairs: " << a.config.von_staudt_conjugate_pairs << "/"
       << a.config.von_staudt_checked_pairs << " checked\n";
  }
  if (full || csc_only) {
    os << "CSC: " << (a.config.csc_all_defined_conjugate ? "passes" : "fails") << " ("
       << a.config.csc_checked() << " checked pairs, " << a.config.csc_skipped() << " skipped)\n";
    for (const auto& pr : a.config.csc_pairs)
      os << "  {" << pr.alpha.str() << "," << pr.beta.str() << "}: " << status_str(pr.status)
         << "\n";
  }
  if (full || alignments_only) {
    os << "tri-involutive: " << (a.tri_involutive ? "true" : "false")
       << "  alignments: " << a.alignment_count
       << "  theta54 vanishes: " << (a.theta54_vanishes ? "true" : "false") << "\n";
  }
  if (full) {
    os << "g-lines (undefined:";
    if (a.config.undefined_cayley_salmon.empty()) os << " none";
    for (const auto& t : a.config.undefined_cayley_salmon) os << " " << t.str();
    os << ")\n";
    for (const auto& [label, form] : a.g_lines)
      os << "  g(" << label << ") = " << (form ? *form : std::string("undefined")) << "\n";
  }
  return os.str();
}

json extensions_json(const ExtensionSet<GaussianRational>& ext) {
  json seed = json::array();
  for (const auto& p : ext.seed) seed.push_back(print_point(p));
  json items = json::array();
  for (const auto& item : ext.items) {
    json pts = json::array();
    if (item.exact) {
      for (const auto& p : item.exact_points->pts) pts.push_back(print_point(p));
    } else {
      for (const auto& z : item.numeric_points) pts.push_back(cp1_str(z));
    }
    items.push_back(json{{"kind", item.exact ? "exact" : "numeric"}, {"points", pts}});
  }
  return json{{"schema", "mysticum/1"},
              {"seed", seed},
              {"normalized_r", print_scalar(ext.normalized_r)},
              {"count", ext.items.size()},
              {"extensions", items}};
}

std::string extensions_text(const ExtensionSet<GaussianRational>& ext) {
  std::ostringstream os;
  os << "seed:";
  for (const auto& p : ext.seed) os << " " << print_point(p);
  os << "   (normalized r = " << print_scalar(ext.normalized_r) << ")\n";
  os << ext.items.size() << " tri-involutive extensions\n";
  int idx = 1;
  for (const auto& item : ext.items) {
    os << "  [" << idx++ << "] " << (item.exact ? "exact  " : "numeric");
    if (item.exact) {
      for (const auto& p : item.exact_points->pts) os << " " << print_point(p);
    } else {
      for (const auto& z : item.numeric_points) os << " " << cp1_str(z);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace mysticum
