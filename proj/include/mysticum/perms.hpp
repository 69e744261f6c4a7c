#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mysticum/errors.hpp"

namespace mysticum {

struct LetterTag {
  static constexpr char names[6] = {'A', 'B', 'C', 'D', 'E', 'F'};
};
struct IndexTag {
  static constexpr char names[6] = {'1', '2', '3', '4', '5', '6'};
};

// Permutation of a fixed 6-element ground set. The tag keeps the two sides
// of the exotic isomorphism (letters A..F vs indices 1..6) from mixing.
template <class Tag>
class Perm {
 public:
  Perm() {
    for (int i = 0; i < 6; ++i) img_[i] = static_cast<uint8_t>(i);
  }
  explicit Perm(std::array<uint8_t, 6> images) : img_(images) {
    std::array<bool, 6> seen{};
    for (uint8_t v : img_) {
      require(v < 6 && !seen[v], "Perm: not a bijection");
      seen[v] = true;
    }
  }

  static Perm identity() { return Perm(); }
  static Perm transposition(int i, int j) {
    Perm p;
    std::swap(p.img_[i], p.img_[j]);
    return p;
  }
  // cycles given as 0-based element lists, e.g. {{0,1},{2,3}}
  static Perm from_cycles(const std::vector<std::vector<int>>& cycles) {
    Perm p;
    for (const auto& cyc : cycles)
      for (size_t k = 0; k < cyc.size(); ++k) p.img_[cyc[k]] = static_cast<uint8_t>(cyc[(k + 1) % cyc.size()]);
    // re-validate
    return Perm(p.img_);
  }

  int operator()(int x) const { return img_[x]; }
  const std::array<uint8_t, 6>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < 6; ++i)
      if (img_[i] != i) return false;
    return true;
  }

  // (p * q)(x) = p(q(x))
  friend Perm operator*(const Perm& p, const Perm& q) {
    Perm r;
    for (int i = 0; i < 6; ++i) r.img_[i] = p.img_[q.img_[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    for (int i = 0; i < 6; ++i) r.img_[img_[i]] = static_cast<uint8_t>(i);
    return r;
  }

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

  // factorization into transpositions along cycles; empty for the identity
  std::vector<std::pair<int, int>> transpositions() const {
    std::vector<std::pair<int, int>> ts;
    std::array<bool, 6> seen{};
    for (int s = 0; s < 6; ++s) {
      if (seen[s]) continue;
      std::vector<int> cyc;
      int x = s;
      while (!seen[x]) {
        seen[x] = true;
        cyc.push_back(x);
        x = img_[x];
      }
      for (size_t k = 0; k + 1 < cyc.size(); ++k) ts.emplace_back(cyc[k], cyc[k + 1]);
    }
    return ts;
  }

  // partition shape of the cycle decomposition, descending (e.g. 2+2+2)
  std::vector<int> cycle_type() const {
    std::vector<int> lens;
    std::array<bool, 6> seen{};
    for (int s = 0; s < 6; ++s) {
      if (seen[s]) continue;
      int len = 0, x = s;
      while (!seen[x]) {
        seen[x] = true;
        ++len;
        x = img_[x];
      }
      lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return lens;
  }

  std::string str() const {
    std::string out;
    std::array<bool, 6> seen{};
    for (int s = 0; s < 6; ++s) {
      if (seen[s] || img_[s] == s) {
        seen[s] = true;
        continue;
      }
      out += '(';
      int x = s;
      bool first = true;
      while (!seen[x]) {
        seen[x] = true;
        if (!first) out += ' ';
        out += Tag::names[x];
        first = false;
        x = img_[x];
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

 private:
  std::array<uint8_t, 6> img_;
};

using LetterPerm = Perm<LetterTag>;
using IndexPerm = Perm<IndexTag>;

// All 720 permutations, in lexicographic order of image arrays.
template <class Tag>
std::vector<Perm<Tag>> all_perms() {
  std::array<uint8_t, 6> a = {0, 1, 2, 3, 4, 5};
  std::vector<Perm<Tag>> out;
  out.reserve(720);
  do {
    out.push_back(Perm<Tag>(a));
  } while (std::next_permutation(a.begin(), a.end()));
  return out;
}

// Subgroup generated by breadth-first closure under composition.
template <class Tag>
std::vector<Perm<Tag>> group_closure(std::vector<Perm<Tag>> generators) {
  require(!generators.empty(), "group_closure: empty generator set");
  std::vector<Perm<Tag>> elems = {Perm<Tag>::identity()};
  std::vector<Perm<Tag>> frontier = elems;
  auto contains = [&](const Perm<Tag>& p) {
    return std::binary_search(elems.begin(), elems.end(), p);
  };
  std::sort(elems.begin(), elems.end());
  while (!frontier.empty()) {
    std::vector<Perm<Tag>> next;
    for (const auto& f : frontier) {
      for (const auto& g : generators) {
        Perm<Tag> h = g * f;
        if (!contains(h)) {
          elems.push_back(h);
          std::sort(elems.begin(), elems.end());
          next.push_back(h);
        }
      }
    }
    frontier = std::move(next);
  }
  return elems;
}

}  // namespace mysticum
