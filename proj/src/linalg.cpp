#include "abec/linalg.hpp"

#include <utility>

namespace abec {

namespace {

void swap_rows(Matrix& m, int r0, int r1) {
  if (r0 == r1) return;
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(r0, c), m.at(r1, c));
}

// Row echelon form over the first `pivot_cols` columns; trailing columns are
// carried along (augmented part). Returns the pivot columns in order.
std::vector<int> echelon(const Field& f, Matrix& m, int pivot_cols) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < pivot_cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    swap_rows(m, p, r);
    const Symbol inv = f.inv(m.at(r, c));
    for (int j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const Symbol factor = m.at(i, c);
      for (int j = c; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols, m.rows);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
  return t;
}

Matrix matmul(const Field& f, const Matrix& x, const Matrix& y) {
  Matrix z(x.rows, y.cols);
  for (int r = 0; r < x.rows; ++r)
    for (int i = 0; i < x.cols; ++i) {
      const Symbol v = x.at(r, i);
      if (v == 0) continue;
      for (int c = 0; c < y.cols; ++c)
        z.at(r, c) = f.add(z.at(r, c), f.mul(v, y.at(i, c)));
    }
  return z;
}

std::vector<Symbol> matvec(const Field& f, const Matrix& m,
                           const std::vector<Symbol>& v) {
  std::vector<Symbol> out(m.rows, 0);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      out[r] = f.add(out[r], f.mul(m.at(r, c), v[c]));
  return out;
}

int rank(const Field& f, Matrix m) {
  return int(echelon(f, m, m.cols).size());
}

std::optional<std::vector<Symbol>> solve(const Field& f, Matrix a,
                                         std::vector<Symbol> b) {
  const int n = a.cols;
  Matrix aug(a.rows, n + 1);
  for (int r = 0; r < a.rows; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, n) = b[r];
  }
  const std::vector<int> pivots = echelon(f, aug, n);
  if (int(pivots.size()) < n) return std::nullopt;
  // Inconsistent rows: all-zero coefficients with nonzero right-hand side.
  for (int r = n; r < aug.rows; ++r)
    if (aug.at(r, n) != 0) return std::nullopt;
  std::vector<Symbol> x(n, 0);
  for (int r = 0; r < n; ++r) x[pivots[r]] = aug.at(r, n);
  return x;
}

std::optional<Matrix> invert(const Field& f, Matrix m) {
  const int n = m.rows;
  Matrix aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  if (int(echelon(f, aug, n).size()) < n) return std::nullopt;
  Matrix inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
  return inv;
}

Symbol determinant(const Field& f, Matrix m) {
  const int n = m.rows;
  Symbol det = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (m.at(r, c) != 0) {
        p = r;
        break;
      }
    if (p < 0) return 0;
    swap_rows(m, p, c);  // row swaps do not change sign in characteristic 2
    det = f.mul(det, m.at(c, c));
    const Symbol inv = f.inv(m.at(c, c));
    for (int r = c + 1; r < n; ++r) {
      const Symbol factor = f.mul(m.at(r, c), inv);
      if (factor == 0) continue;
      for (int j = c; j < n; ++j)
        m.at(r, j) = f.sub(m.at(r, j), f.mul(factor, m.at(c, j)));
    }
  }
  return det;
}

}  // namespace abec
