#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mysticum/plane.hpp"
#include "mysticum/zeta.hpp"

namespace mysticum {

class DegeneratePascalError : public domain_error {
 public:
  DegeneratePascalError() : domain_error("pascal: all three cross-hair points coincide") {}
};
class DegenerateSteinerError : public domain_error {
 public:
  DegenerateSteinerError() : domain_error("steiner: defining Pascals all coincide") {}
};
class DegenerateKirkmanError : public domain_error {
 public:
  DegenerateKirkmanError() : domain_error("kirkman: defining Pascals all coincide") {}
};

// ---- combinatorial labels -------------------------------------------------

// Pascal line k(x, yz): x and an unordered pair {y, z} disjoint from it.
// Indices are 1-based to match the classical notation.
struct PascalLabel {
  int x, y, z;  // y < z
  PascalLabel(int x_, int y_, int z_) : x(x_), y(std::min(y_, z_)), z(std::max(y_, z_)) {
    require(x >= 1 && z <= 6 && y >= 1 && x != y && x != z && y != z, "PascalLabel: bad indices");
  }
  std::string str() const {
    return "k(" + std::to_string(x) + "," + std::to_string(y) + std::to_string(z) + ")";
  }
  friend bool operator<(const PascalLabel& a, const PascalLabel& b) {
    return std::array{a.x, a.y, a.z} < std::array{b.x, b.y, b.z};
  }
};

// 3-element subset of {1..6}, kept sorted.
struct Triple {
  int x, y, z;
  Triple(int a, int b, int c) : x(a), y(b), z(c) {
    if (x > y) std::swap(x, y);
    if (y > z) std::swap(y, z);
    if (x > y) std::swap(x, y);
    require(x >= 1 && z <= 6 && x != y && y != z, "Triple: bad indices");
  }
  bool contains(int w) const { return w == x || w == y || w == z; }
  Triple complement() const {
    std::array<int, 3> rest{};
    int k = 0;
    for (int i = 1; i <= 6; ++i)
      if (!contains(i)) rest[k++] = i;
    return Triple(rest[0], rest[1], rest[2]);
  }
  std::string str() const { return std::to_string(x) + std::to_string(y) + std::to_string(z); }
  friend bool operator<(const Triple& a, const Triple& b) {
    return std::array{a.x, a.y, a.z} < std::array{b.x, b.y, b.z};
  }
  friend bool operator==(const Triple& a, const Triple& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

std::vector<PascalLabel> all_pascal_labels();  // 60
std::vector<Triple> all_triples();             // 20

// Any index permutation with sigma(1) = x and sigma({2,3}) = {y,z}; the
// Pascal construction is independent of the choice within this coset
// (asserted by tests over all 12 admissible choices).
IndexPerm canonical_label_transport(const PascalLabel& label);

// ---- construction over an arbitrary coefficient ring ----------------------
//
// The geometric pipeline only needs ring arithmetic; it is shared between
// exact fields (points given on the conic) and the symbolic setting where
// the six conic forms carry polynomial coordinates a..f.

// Intermediate-normalization hook; the identity for fields. The MultiPoly
// overload strips variable-difference content after every transvectant to
// keep symbolic coefficients small.
template <class R>
inline void reduce_form(BinaryForm<R>&) {}
void reduce_form(BinaryForm<MultiPoly>& f);

template <class R>
using ConicSix = std::array<BinaryForm<R>, 6>;  // conic forms for letters A..F

namespace detail {

template <class R>
BinaryForm<R> rjoin(const BinaryForm<R>& a, const BinaryForm<R>& b) {
  BinaryForm<R> j = transvectant(a, b, 1);
  reduce_form(j);
  return j;
}

// Meet two of three concurrent lines (or join two of three collinear
// points), asserting the classical concurrency of the remaining one.
// Returns nothing when all three are pairwise proportional.
template <class R>
std::optional<BinaryForm<R>> meet_asserting(const std::array<BinaryForm<R>, 3>& elems,
                                            const char* theorem) {
  std::optional<BinaryForm<R>> out;
  for (int i = 0; i < 3 && !out; ++i)
    for (int j = i + 1; j < 3 && !out; ++j) {
      BinaryForm<R> m = transvectant(elems[i], elems[j], 1);
      if (!m.is_zero()) {
        reduce_form(m);
        out = std::move(m);
      }
    }
  if (!out) return std::nullopt;
  for (const auto& e : elems)
    check_theorem(transvectant(*out, e, 2).is_zero(), theorem);
  return out;
}

}  // namespace detail

// Pascal line of the base label k(1,23): the line through the cross-hair
// points AE^BF, AD^CF, BD^CE of the array [A B C / F E D].
template <class R>
BinaryForm<R> base_pascal_form(const ConicSix<R>& six) {
  auto chord_ = [&](int p, int q) { return detail::rjoin(six[p], six[q]); };
  // letters: A=0 .. F=5
  std::array<BinaryForm<R>, 3> cross = {
      detail::rjoin(chord_(0, 4), chord_(1, 5)),
      detail::rjoin(chord_(0, 3), chord_(2, 5)),
      detail::rjoin(chord_(1, 3), chord_(2, 4)),
  };
  for (const auto& c : cross)
    if (c.is_zero()) throw DegeneratePascalError();
  auto line = detail::meet_asserting(cross, "pascal: cross-hair points not collinear");
  if (!line) throw DegeneratePascalError();
  return *line;
}

template <class R>
ConicSix<R> permute_conic(const ConicSix<R>& six, const LetterPerm& eta) {
  ConicSix<R> out;
  for (int L = 0; L < 6; ++L) out[L] = six[eta(L)];
  return out;
}

template <class R>
BinaryForm<R> pascal_form(const ConicSix<R>& six, const PascalLabel& label) {
  LetterPerm eta = zeta_inv(canonical_label_transport(label));
  return base_pascal_form(permute_conic(six, eta));
}

template <class R>
std::optional<BinaryForm<R>> steiner_form(const ConicSix<R>& six, const Triple& t) {
  std::array<BinaryForm<R>, 3> pas = {
      pascal_form(six, PascalLabel(t.x, t.y, t.z)),
      pascal_form(six, PascalLabel(t.y, t.x, t.z)),
      pascal_form(six, PascalLabel(t.z, t.x, t.y)),
  };
  return detail::meet_asserting(pas, "steiner: Pascals not concurrent");
}

template <class R>
std::optional<BinaryForm<R>> kirkman_form(const ConicSix<R>& six, int w, const Triple& t) {
  require(!t.contains(w), "kirkman: index inside the triple");
  std::array<BinaryForm<R>, 3> pas = {
      pascal_form(six, PascalLabel(w, t.x, t.y)),
      pascal_form(six, PascalLabel(w, t.x, t.z)),
      pascal_form(six, PascalLabel(w, t.y, t.z)),
  };
  return detail::meet_asserting(pas, "kirkman: Pascals not concurrent");
}

// Cayley-Salmon line g(xyz) through the Kirkman points K[w, xyz] for the
// three w outside xyz. Returns nothing when the Kirkman points all
// coincide, which is the geometrically meaningful "undefined" outcome.
// When defined, asserts the third Kirkman point and the Steiner point
// G[xyz] are incident.
template <class R>
std::optional<BinaryForm<R>> cayley_salmon_form(const ConicSix<R>& six, const Triple& t) {
  Triple comp = t.complement();
  std::array<BinaryForm<R>, 3> ks;
  int idx = 0;
  for (int w : {comp.x, comp.y, comp.z}) {
    auto k = kirkman_form(six, w, t);
    if (!k) throw DegenerateKirkmanError();
    ks[idx++] = std::move(*k);
  }
  auto line = detail::meet_asserting(ks, "cayley-salmon: Kirkman points not collinear");
  if (!line) return std::nullopt;
  auto g = steiner_form(six, t);
  if (g)
    check_theorem(transvectant(*line, *g, 2).is_zero(),
                  "cayley-salmon: Steiner point not on the line");
  return line;
}

// ---- field-level hexads ----------------------------------------------------

// Injective assignment of the letters A..F to six conic points.
template <class K>
struct Hexad {
  std::array<P1Point<K>, 6> pts;

  explicit Hexad(std::array<P1Point<K>, 6> p) : pts(std::move(p)) {
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        require(!(pts[i] == pts[j]), "Hexad: coincident points");
  }

  ConicSix<K> conic_forms() const {
    ConicSix<K> out;
    for (int i = 0; i < 6; ++i) out[i] = conic_point(pts[i]).form;
    return out;
  }

  Hexad precomposed(const LetterPerm& eta) const {
    std::array<P1Point<K>, 6> p;
    for (int L = 0; L < 6; ++L) p[L] = pts[eta(L)];
    return Hexad(p);
  }
};

template <class K>
PlaneElement<K> pascal(const Hexad<K>& h, const PascalLabel& label) {
  return PlaneElement<K>(pascal_form(h.conic_forms(), label), Role::line);
}

template <class K>
PlaneElement<K> steiner(const Hexad<K>& h, const Triple& t) {
  auto f = steiner_form(h.conic_forms(), t);
  if (!f) throw DegenerateSteinerError();
  return PlaneElement<K>(std::move(*f), Role::point);
}

template <class K>
PlaneElement<K> kirkman(const Hexad<K>& h, int w, const Triple& t) {
  auto f = kirkman_form(h.conic_forms(), w, t);
  if (!f) throw DegenerateKirkmanError();
  return PlaneElement<K>(std::move(*f), Role::point);
}

template <class K>
std::optional<PlaneElement<K>> cayley_salmon(const Hexad<K>& h, const Triple& t) {
  auto f = cayley_salmon_form(h.conic_forms(), t);
  if (!f) return std::nullopt;
  return PlaneElement<K>(std::move(*f), Role::line);
}

// ---- configuration audit ---------------------------------------------------

enum class CscStatus { conjugate, not_conjugate, skipped_undefined };

struct CscPair {
  Triple alpha;
  Triple beta;  // complement
  CscStatus status;
};

// Tallies of an incidence relation between two classes of configuration
// elements, recorded over distinct projective representatives.
struct IncidenceProfile {
  std::map<int, int> per_point;  // incidences-per-point histogram
  std::map<int, int> per_line;
  long total_point_side = 0;
  long total_line_side = 0;

  bool consistent() const { return total_point_side == total_line_side; }
  bool matches(int point_count, int on_lines, int line_count, int through_points) const;
};

struct ConfigurationReport {
  int distinct_pascal = 0;
  int distinct_steiner = 0;
  int distinct_kirkman = 0;
  int distinct_cayley_salmon = 0;  // among defined lines
  int defined_cayley_salmon = 0;   // labels with a defined line
  std::vector<Triple> undefined_cayley_salmon;
  std::vector<Triple> undefined_steiner;       // Pascals of the triple coincide
  std::vector<std::string> undefined_kirkman;  // "w,xyz" labels

  IncidenceProfile kirkman_on_cs;    // general pattern (60_1, 20_3)
  IncidenceProfile kirkman_on_pascal;  // (60_3, 60_3)
  IncidenceProfile steiner_on_pascal;  // (20_3, 60_1)
  IncidenceProfile steiner_on_cs;      // (20_1, 20_1)

  int von_staudt_checked_pairs = 0;    // complementary pairs with both points defined
  int von_staudt_conjugate_pairs = 0;  // out of the checked ones
  std::vector<CscPair> csc_pairs;      // the 10 complementary pairs
  bool csc_all_defined_conjugate = false;
  bool general_position_profile = false;  // exact classical incidence counts

  int csc_checked() const;
  int csc_skipped() const;
};

// Builds the full configuration, counts distinct projective classes,
// tallies all four incidence relations exactly, checks von Staudt
// conjugacy on the ten complementary Steiner pairs and the Cayley-Salmon
// conjugacy verdict on every defined complementary pair.
template <class K>
ConfigurationReport audit(const Hexad<K>& h);

// ---- implementation of audit ----------------------------------------------

namespace detail {

template <class K>
std::vector<int> distinct_classes(const std::vector<const BinaryForm<K>*>& forms) {
  // class id per element, by pairwise projective comparison
  std::vector<int> cls(forms.size(), -1);
  std::vector<const BinaryForm<K>*> reps;
  for (size_t i = 0; i < forms.size(); ++i) {
    for (size_t r = 0; r < reps.size(); ++r) {
      if (proportional(*forms[i], *reps[r])) {
        cls[i] = static_cast<int>(r);
        break;
      }
    }
    if (cls[i] < 0) {
      cls[i] = static_cast<int>(reps.size());
      reps.push_back(forms[i]);
    }
  }
  return cls;
}

template <class K>
IncidenceProfile incidence_profile(const std::vector<BinaryForm<K>>& points,
                                   const std::vector<BinaryForm<K>>& lines) {
  IncidenceProfile prof;
  std::vector<int> per_point(points.size(), 0), per_line(lines.size(), 0);
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = 0; j < lines.size(); ++j)
      if (transvectant(points[i], lines[j], 2).is_zero()) {
        ++per_point[i];
        ++per_line[j];
      }
  for (int c : per_point) {
    ++prof.per_point[c];
    prof.total_point_side += c;
  }
  for (int c : per_line) {
    ++prof.per_line[c];
    prof.total_line_side += c;
  }
  return prof;
}

template <class K>
std::vector<BinaryForm<K>> unique_forms(const std::vector<BinaryForm<K>>& all) {
  std::vector<BinaryForm<K>> reps;
  for (const auto& f : all) {
    bool found = false;
    for (const auto& r : reps)
      if (proportional(f, r)) {
        found = true;
        break;
      }
    if (!found) reps.push_back(f);
  }
  return reps;
}

}  // namespace detail

template <class K>
ConfigurationReport audit(const Hexad<K>& h) {
  ConfigurationReport rep;
  ConicSix<K> six = h.conic_forms();

  std::vector<BinaryForm<K>> pascals;
  for (const auto& lab : all_pascal_labels()) pascals.push_back(pascal_form(six, lab));
  std::vector<std::optional<BinaryForm<K>>> steiners;
  std::vector<BinaryForm<K>> steiner_defined;
  std::vector<Triple> triples = all_triples();
  for (const auto& t : triples) {
    auto s = steiner_form(six, t);
    if (s)
      steiner_defined.push_back(*s);
    else
      rep.undefined_steiner.push_back(t);
    steiners.push_back(std::move(s));
  }
  std::vector<BinaryForm<K>> kirkmans;
  for (const auto& t : triples)
    for (int w = 1; w <= 6; ++w) {
      if (t.contains(w)) continue;
      auto k = kirkman_form(six, w, t);
      if (k)
        kirkmans.push_back(std::move(*k));
      else
        rep.undefined_kirkman.push_back(std::to_string(w) + "," + t.str());
    }
  std::vector<std::optional<BinaryForm<K>>> cs;
  std::vector<BinaryForm<K>> cs_defined;
  for (const auto& t : triples) {
    std::optional<BinaryForm<K>> g;
    try {
      g = cayley_salmon_form(six, t);
    } catch (const DegenerateKirkmanError&) {
      g = std::nullopt;  // a defining Kirkman point is itself undefined
    }
    if (g) {
      ++rep.defined_cayley_salmon;
      cs_defined.push_back(*g);
    } else {
      rep.undefined_cayley_salmon.push_back(t);
    }
    cs.push_back(std::move(g));
  }

  std::vector<BinaryForm<K>> upascal = detail::unique_forms(pascals);
  std::vector<BinaryForm<K>> usteiner = detail::unique_forms(steiner_defined);
  std::vector<BinaryForm<K>> ukirkman = detail::unique_forms(kirkmans);
  std::vector<BinaryForm<K>> ucs = detail::unique_forms(cs_defined);
  rep.distinct_pascal = static_cast<int>(upascal.size());
  rep.distinct_steiner = static_cast<int>(usteiner.size());
  rep.distinct_kirkman = static_cast<int>(ukirkman.size());
  rep.distinct_cayley_salmon = static_cast<int>(ucs.size());

  rep.kirkman_on_cs = detail::incidence_profile(ukirkman, ucs);
  rep.kirkman_on_pascal = detail::incidence_profile(ukirkman, upascal);
  rep.steiner_on_pascal = detail::incidence_profile(usteiner, upascal);
  rep.steiner_on_cs = detail::incidence_profile(usteiner, ucs);

  // von Staudt: complementary Steiner points conjugate
  std::map<std::string, size_t> steiner_index;
  for (size_t i = 0; i < triples.size(); ++i) steiner_index[triples[i].str()] = i;
  for (size_t i = 0; i < triples.size(); ++i) {
    Triple comp = triples[i].complement();
    if (!(triples[i] < comp)) continue;  // each pair once
    const auto& s1 = steiners[i];
    const auto& s2 = steiners[steiner_index[comp.str()]];
    if (!s1 || !s2) continue;
    ++rep.von_staudt_checked_pairs;
    if (transvectant(*s1, *s2, 2).is_zero()) ++rep.von_staudt_conjugate_pairs;
  }

  // Cayley-Salmon conjugacy on complementary pairs
  rep.csc_all_defined_conjugate = true;
  for (size_t i = 0; i < triples.size(); ++i) {
    Triple comp = triples[i].complement();
    if (!(triples[i] < comp)) continue;
    size_t j = steiner_index[comp.str()];
    CscPair pair{triples[i], comp, CscStatus::skipped_undefined};
    if (cs[i] && cs[j]) {
      bool conj = transvectant(*cs[i], *cs[j], 2).is_zero();
      pair.status = conj ? CscStatus::conjugate : CscStatus::not_conjugate;
      if (!conj) rep.csc_all_defined_conjugate = false;
    }
    rep.csc_pairs.push_back(pair);
  }

  rep.general_position_profile =
      rep.undefined_steiner.empty() && rep.undefined_kirkman.empty() &&
      rep.distinct_pascal == 60 && rep.distinct_steiner == 20 && rep.distinct_kirkman == 60 &&
      rep.defined_cayley_salmon == 20 && rep.distinct_cayley_salmon == 20 &&
      rep.von_staudt_checked_pairs == 10 && rep.von_staudt_conjugate_pairs == 10 &&
      rep.kirkman_on_cs.matches(60, 1, 20, 3) && rep.kirkman_on_pascal.matches(60, 3, 60, 3) &&
      rep.steiner_on_pascal.matches(20, 3, 60, 1) && rep.steiner_on_cs.matches(20, 1, 20, 1);

  return rep;
}

}  // namespace mysticum
