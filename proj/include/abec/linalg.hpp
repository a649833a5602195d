#pragma once

#include <optional>
#include <vector>

#include "abec/gf.hpp"

namespace abec {

// Dense row-major matrix over GF(2^w).
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Symbol> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}

  Symbol& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
  Symbol at(int r, int c) const { return a[std::size_t(r) * cols + c]; }

  static Matrix identity(int n);
  bool operator==(const Matrix&) const = default;
};

Matrix transpose(const Matrix& m);
Matrix matmul(const Field& f, const Matrix& x, const Matrix& y);
std::vector<Symbol> matvec(const Field& f, const Matrix& m,
                           const std::vector<Symbol>& v);

// Rank by Gaussian elimination with first-nonzero pivoting. Field arithmetic
// is exact, so pivot choice is purely deterministic.
int rank(const Field& f, Matrix m);

// Solves a x = b for the unique x. `a` may be rectangular (rows >= cols for a
// unique solution to exist). Returns nullopt when the system is rank deficient
// or inconsistent.
std::optional<std::vector<Symbol>> solve(const Field& f, Matrix a,
                                         std::vector<Symbol> b);

std::optional<Matrix> invert(const Field& f, Matrix m);

Symbol determinant(const Field& f, Matrix m);

}  // namespace abec
