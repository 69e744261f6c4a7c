#include "mysticum/triinv.hpp"

namespace mysticum {

bool is_special_parameter(const GaussianRational& p) {
  const Rational h(1, 2);
  const GaussianRational candidates[6] = {
      GaussianRational(0, 1), GaussianRational(0, -1), GaussianRational(1, 1),
      GaussianRational(1, -1), GaussianRational(h, h), GaussianRational(h, -h)};
  for (const auto& c : candidates)
    if (p == c) return true;
  return false;
}

namespace {

using GR = GaussianRational;

Triangle<GR> triangle_of(const Hexad<GR>& h, const std::array<int, 3>& letters) {
  return Triangle<GR>{h.pts[letters[0]], h.pts[letters[1]], h.pts[letters[2]]};
}

// the 15 perfect matchings of {0..5}
std::vector<std::array<std::pair<int, int>, 3>> all_matchings() {
  std::vector<std::array<std::pair<int, int>, 3>> out;
  for (int a = 1; a < 6; ++a) {
    std::array<int, 4> rest{};
    int k = 0;
    for (int v = 1; v < 6; ++v)
      if (v != a) rest[k++] = v;
    // pair 0 with a; split remaining four into two pairs, three ways
    int splits[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (auto& s : splits)
      out.push_back({std::pair<int, int>{0, a},
                     {rest[s[0]], rest[s[1]]},
                     {rest[s[2]], rest[s[3]]}});
  }
  return out;
}

}  // namespace

SpecialCenterReport special_center_profile(const GaussianRational& p) {
  if (!is_special_parameter(p))
    throw DegenerateParameterError("special_center_profile: p not in the special list");
  Hexad<GR> h = standard_hexad(p);
  SpecialCenterReport rep;

  // A=0 B=1 C=2 D=3 E=4 F=5; the four decompositions with shared centers
  const std::array<std::array<std::array<int, 3>, 2>, 4> decomps = {{
      {{{0, 1, 2}, {3, 4, 5}}},  // T1: ABC | DEF
      {{{0, 3, 5}, {1, 2, 4}}},  // T2: ADF | BCE
      {{{0, 2, 3}, {1, 4, 5}}},  // T3: ACD | BEF
      {{{0, 1, 5}, {2, 3, 4}}},  // T4: ABF | CDE
  }};
  for (int i = 0; i < 4; ++i) {
    PlaneElement<GR> c1 = chasles_center(triangle_of(h, decomps[i][0]));
    PlaneElement<GR> c2 = chasles_center(triangle_of(h, decomps[i][1]));
    check_theorem(same_element(c1, c2), "special_center_profile: decomposition centers differ");
    rep.pairs[i] = CenterPair{decomps[i][0], decomps[i][1], c1.form};
  }

  // involution centers: matchings whose three chords concur
  for (const auto& m : all_matchings()) {
    std::array<BinaryForm<GR>, 3> chords = {
        chord(h.pts[m[0].first], h.pts[m[0].second]).form,
        chord(h.pts[m[1].first], h.pts[m[1].second]).form,
        chord(h.pts[m[2].first], h.pts[m[2].second]).form,
    };
    BinaryForm<GR> meet = transvectant(chords[0], chords[1], 1);
    if (meet.is_zero()) continue;
    if (!transvectant(meet, chords[2], 2).is_zero()) continue;
    bool dup = false;
    for (const auto& c : rep.involution_centers)
      if (proportional(c, meet)) dup = true;
    if (!dup) rep.involution_centers.push_back(meet);
  }

  // The six distinct centers form the complete quadrilateral of the four
  // polar lines: three on each line (twelve incidences in all, so each
  // center is shared by two lines), and they are exactly the pairwise
  // meets of those lines.
  if (rep.involution_centers.size() == 6) {
    int incidences = 0;
    bool three_per_line = true;
    for (const auto& pr : rep.pairs) {
      int on_line = 0;
      for (const auto& c : rep.involution_centers)
        if (transvectant(c, pr.center, 2).is_zero()) ++on_line;
      if (on_line != 3) three_per_line = false;
      incidences += on_line;
    }
    bool meets_match = true;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        BinaryForm<GR> meet = transvectant(rep.pairs[i].center, rep.pairs[j].center, 1);
        bool found = false;
        for (const auto& c : rep.involution_centers)
          if (!meet.is_zero() && proportional(c, meet)) found = true;
        if (!found) meets_match = false;
      }
    rep.centers_by_threes_on_four_lines = three_per_line && incidences == 12 && meets_match;
  }

  // Klein action on the four decompositions: letter swaps (A E) and (C F)
  auto image_pair_index = [&](const LetterPerm& eta, int i) {
    // apply eta to both triangles of decomposition i, find which T_j results
    auto apply = [&](const std::array<int, 3>& tri) {
      std::array<int, 3> out{};
      for (int k = 0; k < 3; ++k) out[k] = eta(tri[k]);
      std::sort(out.begin(), out.end());
      return out;
    };
    std::array<int, 3> t1 = apply(decomps[i][0]);
    std::array<int, 3> t2 = apply(decomps[i][1]);
    for (int j = 0; j < 4; ++j) {
      std::array<int, 3> u1 = decomps[j][0], u2 = decomps[j][1];
      std::sort(u1.begin(), u1.end());
      std::sort(u2.begin(), u2.end());
      if ((t1 == u1 && t2 == u2) || (t1 == u2 && t2 == u1)) return j;
    }
    return -1;
  };
  LetterPerm swap_ae = LetterPerm::transposition(0, 4);
  LetterPerm swap_cf = LetterPerm::transposition(2, 5);
  const int expect_ae[4] = {1, 0, 3, 2};  // (T1 T2)(T3 T4)
  const int expect_cf[4] = {3, 2, 1, 0};  // (T1 T4)(T2 T3)
  rep.klein_action_matches = true;
  for (int i = 0; i < 4; ++i) {
    if (image_pair_index(swap_ae, i) != expect_ae[i]) rep.klein_action_matches = false;
    if (image_pair_index(swap_cf, i) != expect_cf[i]) rep.klein_action_matches = false;
  }
  return rep;
}

}  // namespace mysticum
