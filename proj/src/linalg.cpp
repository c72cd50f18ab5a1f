#include "tangents/linalg.hpp"

namespace tangents {

std::vector<std::vector<Rational>> nullspace(RationalMatrix rows, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && sgn(rows[pivot][c]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);

    const Rational inv = 1 / rows[rank][c];
    for (std::size_t k = c; k < cols; ++k) rows[rank][k] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || sgn(rows[r][c]) == 0) continue;
      const Rational factor = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    pivot_cols.push_back(c);
    ++rank;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace tangents
