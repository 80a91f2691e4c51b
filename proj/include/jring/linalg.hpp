#pragma once

#include <vector>

#include "jring/numeric.hpp"

namespace jring {

// Exact rank of a row collection by fraction-free elimination (denominators
// cleared per row, Bareiss one-step updates).  All rows must share a length.
int rational_rank(const std::vector<std::vector<Rat>>& rows);

// Nullity of the row span acting on column vectors of length ncols; the
// empty row set has nullity ncols.
int rational_nullspace_dim(const std::vector<std::vector<Rat>>& rows, int ncols);

int integer_rank(std::vector<std::vector<Int>> rows);

}  // namespace jring
