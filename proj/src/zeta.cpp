#include "mysticum/zeta.hpp"

#include <map>

namespace mysticum {

namespace {

struct Cell {
  int x, y;                              // letter pair, 0-based
  std::array<std::pair<int, int>, 3> p;  // index pairs, 0-based
};

// Row A: B:14.25.36  C:16.24.35  D:13.26.45  E:12.34.56  F:15.23.46
// Row B: C:15.26.34  D:12.35.46  E:16.23.45  F:13.24.56
// Row C: D:14.23.56  E:13.25.46  F:12.36.45
// Row D: E:15.24.36  F:16.25.34
// Row E: F:14.26.35
constexpr Cell kTable[15] = {
    {0, 1, {{{0, 3}, {1, 4}, {2, 5}}}}, {0, 2, {{{0, 5}, {1, 3}, {2, 4}}}},
    {0, 3, {{{0, 2}, {1, 5}, {3, 4}}}}, {0, 4, {{{0, 1}, {2, 3}, {4, 5}}}},
    {0, 5, {{{0, 4}, {1, 2}, {3, 5}}}}, {1, 2, {{{0, 4}, {1, 5}, {2, 3}}}},
    {1, 3, {{{0, 1}, {2, 4}, {3, 5}}}}, {1, 4, {{{0, 5}, {1, 2}, {3, 4}}}},
    {1, 5, {{{0, 2}, {1, 3}, {4, 5}}}}, {2, 3, {{{0, 3}, {1, 2}, {4, 5}}}},
    {2, 4, {{{0, 2}, {1, 4}, {3, 5}}}}, {2, 5, {{{0, 1}, {2, 5}, {3, 4}}}},
    {3, 4, {{{0, 4}, {1, 3}, {2, 5}}}}, {3, 5, {{{0, 5}, {1, 4}, {2, 3}}}},
    {4, 5, {{{0, 3}, {1, 5}, {2, 4}}}},
};

const Cell& find_cell(int x, int y) {
  if (x > y) std::swap(x, y);
  for (const Cell& c : kTable)
    if (c.x == x && c.y == y) return c;
  throw domain_error("zeta: bad letter pair");
}

IndexPerm image_of_letter_transposition(int x, int y) {
  const Cell& c = find_cell(x, y);
  IndexPerm r;
  for (const auto& [i, j] : c.p) r = IndexPerm::transposition(i, j) * r;
  return r;
}

LetterPerm image_of_index_transposition(int i, int j) {
  if (i > j) std::swap(i, j);
  LetterPerm r;
  int hits = 0;
  for (const Cell& c : kTable) {
    for (const auto& [u, v] : c.p) {
      if (u == i && v == j) {
        r = LetterPerm::transposition(c.x, c.y) * r;
        ++hits;
      }
    }
  }
  check_theorem(hits == 3, "zeta table: index pair not in exactly three cells");
  return r;
}

}  // namespace

const std::array<std::pair<int, int>, 3>& zeta_cell(int letter_x, int letter_y) {
  return find_cell(letter_x, letter_y).p;
}

IndexPerm zeta(const LetterPerm& sigma) {
  IndexPerm r;
  for (const auto& [x, y] : sigma.transpositions())
    r = r * image_of_letter_transposition(x, y);
  return r;
}

LetterPerm zeta_inv(const IndexPerm& sigma) {
  LetterPerm r;
  for (const auto& [i, j] : sigma.transpositions())
    r = r * image_of_index_transposition(i, j);
  return r;
}

void zeta_table_selfcheck() {
  // every index pair appears in exactly three cells
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) (void)image_of_index_transposition(i, j);
  // homomorphism on all pairs, bijectivity, 2+2+2 transposition images
  auto perms = all_perms<LetterTag>();
  std::vector<IndexPerm> images;
  images.reserve(perms.size());
  for (const auto& p : perms) images.push_back(zeta(p));
  std::vector<IndexPerm> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  check_theorem(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                "zeta: not injective");
  for (size_t i = 0; i < perms.size(); ++i) {
    for (size_t j = 0; j < perms.size(); ++j) {
      IndexPerm lhs = zeta(perms[i] * perms[j]);
      IndexPerm rhs = images[i] * images[j];
      check_theorem(lhs == rhs, "zeta: not a homomorphism");
    }
  }
  for (int x = 0; x < 6; ++x)
    for (int y = x + 1; y < 6; ++y) {
      auto type = zeta(LetterPerm::transposition(x, y)).cycle_type();
      check_theorem(type == std::vector<int>({2, 2, 2}), "zeta: transposition image not 2+2+2");
    }
  // round trip
  for (const auto& p : perms) check_theorem(zeta_inv(zeta(p)) == p, "zeta_inv: not inverse");
}

}  // namespace mysticum
