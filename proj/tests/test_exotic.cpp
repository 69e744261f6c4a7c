#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mysticum/zeta.hpp"

using namespace mysticum;

namespace {
LetterPerm lp(std::initializer_list<std::pair<char, char>> transpositions) {
  LetterPerm r;
  for (auto [x, y] : transpositions) r = LetterPerm::transposition(x - 'A', y - 'A') * r;
  return r;
}
IndexPerm ip(std::initializer_list<std::pair<int, int>> transpositions) {
  IndexPerm r;
  for (auto [i, j] : transpositions) r = IndexPerm::transposition(i - 1, j - 1) * r;
  return r;
}
}  // namespace

TEST_CASE("perm basics") {
  LetterPerm abc = LetterPerm::from_cycles({{0, 1, 2}});
  CHECK(abc.cycle_type() == std::vector<int>({3, 1, 1, 1}));
  CHECK((abc * abc * abc).is_identity());
  CHECK(abc.inverse() * abc == LetterPerm::identity());
  CHECK(abc.str() == "(A B C)");
  CHECK_THROWS_AS(LetterPerm(std::array<uint8_t, 6>{0, 0, 1, 2, 3, 4}), domain_error);
}

TEST_CASE("zeta on the anchor transpositions") {
  CHECK(zeta(lp({{'A', 'B'}})) == ip({{1, 4}, {2, 5}, {3, 6}}));
  CHECK(zeta(LetterPerm::identity()).is_identity());
  CHECK(zeta(lp({{'A', 'E'}, {'B', 'F'}, {'C', 'D'}})) == ip({{5, 6}}));
}

TEST_CASE("zeta inverse on anchor transpositions") {
  CHECK(zeta_inv(ip({{1, 2}})) == lp({{'A', 'E'}, {'B', 'D'}, {'C', 'F'}}));
  CHECK(zeta_inv(ip({{3, 4}})) == lp({{'A', 'E'}, {'B', 'C'}, {'D', 'F'}}));
  CHECK(zeta_inv(ip({{1, 6}})) == lp({{'A', 'C'}, {'B', 'E'}, {'D', 'F'}}));
  CHECK(zeta_inv(ip({{4, 5}})) == lp({{'A', 'D'}, {'B', 'E'}, {'C', 'F'}}));
}

TEST_CASE("zeta table selfcheck: homomorphism, bijection, 2+2+2 images") {
  CHECK_NOTHROW(zeta_table_selfcheck());
}

TEST_CASE("group closure") {
  CHECK(group_closure<IndexTag>({ip({{1, 2}})}).size() == 2);

  // the nine double-transposition alignment generators close to order 36
  std::vector<LetterPerm> gens;
  const char top[3] = {'A', 'B', 'C'};
  const char bot[3] = {'D', 'E', 'F'};
  int perms3[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (auto& pi : perms3) {
    gens.push_back(lp({{top[0], bot[pi[0]]}, {top[1], bot[pi[1]]}, {top[2], bot[pi[2]]}}));
  }
  CHECK(gens.size() == 6);
  std::vector<LetterPerm> rl = group_closure(gens);
  CHECK(rl.size() == 36);

  // S({1,2,3}) x S({4,5,6}) has order 36 as well
  std::vector<IndexPerm> rn_gens = {ip({{1, 2}}), ip({{2, 3}}), ip({{4, 5}}), ip({{5, 6}})};
  CHECK(group_closure(rn_gens).size() == 36);

  // zeta maps one onto the other
  std::vector<IndexPerm> images;
  for (const auto& g : rl) images.push_back(zeta(g));
  std::sort(images.begin(), images.end());
  std::vector<IndexPerm> rn = group_closure(rn_gens);
  std::sort(rn.begin(), rn.end());
  CHECK(images == rn);

  CHECK_THROWS_AS(group_closure(std::vector<LetterPerm>{}), domain_error);
}
