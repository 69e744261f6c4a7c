#include "mysticum/hexagram.hpp"

namespace mysticum {

std::vector<PascalLabel> all_pascal_labels() {
  std::vector<PascalLabel> out;
  out.reserve(60);
  for (int x = 1; x <= 6; ++x)
    for (int y = 1; y <= 6; ++y)
      for (int z = y + 1; z <= 6; ++z)
        if (x != y && x != z) out.emplace_back(x, y, z);
  return out;
}

std::vector<Triple> all_triples() {
  std::vector<Triple> out;
  out.reserve(20);
  for (int x = 1; x <= 6; ++x)
    for (int y = x + 1; y <= 6; ++y)
      for (int z = y + 1; z <= 6; ++z) out.emplace_back(x, y, z);
  return out;
}

IndexPerm canonical_label_transport(const PascalLabel& label) {
  // sigma(1)=x, sigma(2)=y, sigma(3)=z, remaining indices ascending
  std::array<uint8_t, 6> img{};
  std::array<bool, 6> used{};
  img[0] = static_cast<uint8_t>(label.x - 1);
  img[1] = static_cast<uint8_t>(label.y - 1);
  img[2] = static_cast<uint8_t>(label.z - 1);
  used[img[0]] = used[img[1]] = used[img[2]] = true;
  int slot = 3;
  for (int v = 0; v < 6; ++v)
    if (!used[v]) img[slot++] = static_cast<uint8_t>(v);
  return IndexPerm(img);
}

void reduce_form(BinaryForm<MultiPoly>& f) {
  if (f.is_zero()) return;
  std::vector<MultiPoly> coeffs = f.coeffs();
  // rational content across all coefficients
  Integer num_gcd = 0, den_lcm = 1;
  VarsPtr vars;
  for (const auto& p : coeffs) {
    if (p.vars()) vars = p.vars();
    for (const auto& [m, c] : p.terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    }
  }
  Rational content(num_gcd, den_lcm);
  for (auto& p : coeffs) p = content.inverse() * p;
  if (!vars) return;
  // joint variable-difference content
  int n = static_cast<int>(vars->size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n && !changed; ++i)
      for (int j = i + 1; j < n && !changed; ++j) {
        Monomial mi, mj;
        mi.e[i] = 1;
        mj.e[j] = 1;
        MultiPoly diff = MultiPoly::from_terms({{mi, Rational(1)}, {mj, Rational(-1)}}, vars);
        std::vector<MultiPoly> quotients;
        quotients.reserve(coeffs.size());
        bool all_divide = true;
        for (const auto& p : coeffs) {
          if (p.is_zero()) {
            quotients.push_back(p);
            continue;
          }
          try {
            quotients.push_back(mpoly_exact_div(p, diff));
          } catch (const NotDivisibleError&) {
            all_divide = false;
            break;
          }
        }
        if (all_divide) {
          coeffs = std::move(quotients);
          changed = true;
        }
      }
  }
  // sign convention: highest nonzero coefficient has positive leading term
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    if (it->is_zero()) continue;
    if (it->leading_term().second.sign() < 0)
      for (auto& p : coeffs) p = -p;
    break;
  }
  f = BinaryForm<MultiPoly>(std::move(coeffs));
}

bool IncidenceProfile::matches(int point_count, int on_lines, int line_count,
                               int through_points) const {
  if (!consistent()) return false;
  auto single = [](const std::map<int, int>& hist, int key, int value) {
    return hist.size() == 1 && hist.count(key) == 1 && hist.at(key) == value;
  };
  return single(per_point, on_lines, point_count) && single(per_line, through_points, line_count);
}

int ConfigurationReport::csc_checked() const {
  int n = 0;
  for (const auto& p : csc_pairs)
    if (p.status != CscStatus::skipped_undefined) ++n;
  return n;
}

int ConfigurationReport::csc_skipped() const { return static_cast<int>(csc_pairs.size()) - csc_checked(); }

}  // namespace mysticum
