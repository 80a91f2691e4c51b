#include "jring/linalg.hpp"

#include "jring/util.hpp"

namespace jring {

int integer_rank(std::vector<std::vector<Int>> m) {
  if (m.empty()) return 0;
  std::size_t nrows = m.size(), ncols = m[0].size();
  for (const auto& r : m)
    if (r.size() != ncols) throw InvariantError("ragged row collection");
  Int prev(1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
    std::size_t piv = rank;
    while (piv < nrows && m[piv][col] == 0) ++piv;
    if (piv == nrows) continue;
    m[rank].swap(m[piv]);
    for (std::size_t i = rank + 1; i < nrows; ++i) {
      for (std::size_t j = col + 1; j < ncols; ++j) {
        Int v = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(v);
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return int(rank);
}

static std::vector<std::vector<Int>> clear_denominators(
    const std::vector<std::vector<Rat>>& rows) {
  std::vector<std::vector<Int>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    Int lcm(1);
    for (const Rat& x : row) {
      Int d(x.get_den());
      lcm = lcm / gcd(lcm, d) * d;
    }
    std::vector<Int> r;
    r.reserve(row.size());
    for (const Rat& x : row) r.push_back(Int(x.get_num()) * Int(lcm / x.get_den()));
    out.push_back(std::move(r));
  }
  return out;
}

int rational_rank(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return 0;
  return integer_rank(clear_denominators(rows));
}

int rational_nullspace_dim(const std::vector<std::vector<Rat>>& rows, int ncols) {
  if (rows.empty()) return ncols;
  if (int(rows[0].size()) != ncols)
    throw InvariantError("row length disagrees with ncols");
  return ncols - rational_rank(rows);
}

}  // namespace jring
