#pragma once

#include <utility>
#include <vector>

#include "mysticum/perms.hpp"

namespace mysticum {

// The outer isomorphism between the letter group and the index group,
// given by the classical 15-entry transposition table: each letter
// transposition maps to an index permutation of cycle type 2+2+2 and
// conversely. Well-definedness of the extension to all 720 elements is
// asserted by zeta_table_selfcheck rather than trusted.

// the three index pairs in the table cell of letter pair (x, y), 0-based
const std::array<std::pair<int, int>, 3>& zeta_cell(int letter_x, int letter_y);

IndexPerm zeta(const LetterPerm& sigma);
LetterPerm zeta_inv(const IndexPerm& sigma);

// Structural checks on the embedded table: symmetry, each index pair in
// exactly three cells, homomorphism property on all 720 x 720 pairs,
// bijectivity, and the 2+2+2 image type of every transposition.
void zeta_table_selfcheck();

}  // namespace mysticum
