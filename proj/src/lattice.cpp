#include "ccdeg/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccdeg {

namespace {

// Column-style Hermite reduction of `rows` (m x n), tracked through a
// transform. Works on the transpose: cols[i] is column i of the input, and
// trans[i] records it as a combination of the original columns. Returns the
// rank; on exit, cols[rank..n) are zero.
int column_echelon(const IntMat& rows, int ncols, IntMat& cols, IntMat& trans) {
  int m = static_cast<int>(rows.size());
  cols.assign(ncols, IntVec(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < ncols; ++j) cols[j][i] = rows[i][j];
  trans.assign(ncols, IntVec(ncols, 0));
  for (int j = 0; j < ncols; ++j) trans[j][j] = 1;

  int rank = 0;
  for (int p = 0; p < m && rank < ncols; ++p) {
    // gcd elimination among cols[rank..] at position p
    while (true) {
      int best = -1;
      for (int i = rank; i < ncols; ++i) {
        if (cols[i][p] == 0) continue;
        if (best < 0 || mpz_cmpabs(cols[i][p].get_mpz_t(), cols[best][p].get_mpz_t()) < 0)
          best = i;
      }
      if (best < 0) break;
      std::swap(cols[rank], cols[best]);
      std::swap(trans[rank], trans[best]);
      bool clean = true;
      for (int i = rank + 1; i < ncols; ++i) {
        if (cols[i][p] == 0) continue;
        Integer q = cols[i][p] / cols[rank][p];  // truncated division
        if (q != 0) {
          for (int k = p; k < m; ++k) cols[i][k] -= q * cols[rank][k];
          for (int k = 0; k < ncols; ++k) trans[i][k] -= q * trans[rank][k];
        }
        if (cols[i][p] != 0) clean = false;
      }
      if (clean) {
        ++rank;
        break;
      }
    }
  }
  return rank;
}

}  // namespace

IntMat kernel_basis(const IntMat& rows, int ncols) {
  IntMat cols, trans;
  int rank = column_echelon(rows, ncols, cols, trans);
  IntMat out;
  for (int i = rank; i < ncols; ++i) out.push_back(trans[i]);
  return out;
}

int integer_rank(IntMat rows) {
  if (rows.empty()) return 0;
  int ncols = static_cast<int>(rows[0].size());
  IntMat cols, trans;
  return column_echelon(rows, ncols, cols, trans);
}

Integer determinant(IntMat a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;  // exact
      }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

std::optional<std::vector<Rational>> solve_rational(std::vector<std::vector<Rational>> A,
                                                    std::vector<Rational> b) {
  int m = static_cast<int>(A.size());
  int n = m ? static_cast<int>(A[0].size()) : 0;
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int piv = -1;
    for (int i = row; i < m; ++i)
      if (A[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(A[row], A[piv]);
    std::swap(b[row], b[piv]);
    Rational inv = Rational(1) / A[row][col];
    for (int j = col; j < n; ++j) A[row][j] *= inv;
    b[row] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == row || A[i][col] == 0) continue;
      Rational f = A[i][col];
      for (int j = col; j < n; ++j) A[i][j] -= f * A[row][j];
      b[i] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int i = row; i < m; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rational> x(n, Rational(0));
  for (int i = 0; i < row; ++i) x[pivot_col[i]] = b[i];
  return x;
}

IntMat saturated_span_basis(const IntMat& rows, int ncols) {
  IntMat k = kernel_basis(rows, ncols);
  return kernel_basis(k, ncols);
}

std::optional<IntVec> coordinates_in_lattice(const IntMat& basis_rows, const IntVec& x) {
  int k = static_cast<int>(basis_rows.size());
  int n = static_cast<int>(x.size());
  // Solve basis^T c = x over Q, then demand integrality.
  std::vector<std::vector<Rational>> A(n, std::vector<Rational>(k, Rational(0)));
  std::vector<Rational> b(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) A[i][j] = Rational(basis_rows[j][i]);
    b[i] = Rational(x[i]);
  }
  auto sol = solve_rational(std::move(A), std::move(b));
  if (!sol) return std::nullopt;
  IntVec c(k);
  for (int j = 0; j < k; ++j) {
    if (!is_integer((*sol)[j])) return std::nullopt;
    c[j] = (*sol)[j].get_num();
  }
  return c;
}

}  // namespace ccdeg
