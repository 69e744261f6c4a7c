#include "mysticum/analysis.hpp"

namespace mysticum {

SextupleAnalysis analyze_sextuple(const std::array<P1Point<GaussianRational>, 6>& pts) {
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (pts[i] == pts[j]) throw CoincidentPointsError();

  SextupleAnalysis out;
  out.points = pts;
  out.all_real = true;
  for (const auto& p : pts)
    if (!p.is_infinity() && !p.affine().is_real()) out.all_real = false;

  Hexad<GaussianRational> h(pts);
  out.config = audit(h);

  Sextuple<GaussianRational> s(pts);
  out.alignment_count = static_cast<int>(find_alignments(s).size());
  out.tri_involutive = out.alignment_count > 0;
  out.theta54_vanishes = is_tri_involutive_covariant(s);
  check_theorem(out.tri_involutive == out.theta54_vanishes,
                "analyze: alignment search and covariant detector disagree");

  ConicSix<GaussianRational> six = h.conic_forms();
  for (const Triple& t : all_triples()) {
    std::optional<BinaryForm<GaussianRational>> g;
    try {
      g = cayley_salmon_form(six, t);
    } catch (const DegenerateKirkmanError&) {
      g = std::nullopt;
    }
    if (g)
      out.g_lines[t.str()] = serialize_quadratic(*g);
    else
      out.g_lines[t.str()] = std::nullopt;
  }
  return out;
}

}  // namespace mysticum
