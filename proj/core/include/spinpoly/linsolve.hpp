#pragma once
#include "spinpoly/rational.hpp"
#include <vector>

namespace spinpoly {

// Exact Gaussian elimination: solve A x = b over Q. A is rows x cols with
// linearly independent columns; returns false when the system is
// inconsistent, otherwise fills the unique solution.
inline bool solve_exact_rat(std::vector<std::vector<Rat>> A, std::vector<Rat> b,
                            int rows, int cols, std::vector<Rat>& x) {
  std::vector<int> pivot_col_of_row(rows, -1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int j = r; j < rows; ++j)
      if (A[j][c] != 0) { pr = j; break; }
    if (pr < 0) continue;
    std::swap(A[pr], A[r]);
    std::swap(b[pr], b[r]);
    Rat inv = Rat(1) / A[r][c];
    for (int k = c; k < cols; ++k) A[r][k] *= inv;
    b[r] *= inv;
    for (int j = 0; j < rows; ++j) {
      if (j == r || A[j][c] == 0) continue;
      Rat f = A[j][c];
      for (int k = c; k < cols; ++k) A[j][k] -= f * A[r][k];
      b[j] -= f * b[r];
    }
    pivot_col_of_row[r] = c;
    ++r;
  }
  for (int j = r; j < rows; ++j)
    if (b[j] != 0) return false;
  x.assign(cols, Rat(0));
  for (int j = 0; j < r; ++j) x[pivot_col_of_row[j]] = b[j];
  return true;
}

} // namespace spinpoly
