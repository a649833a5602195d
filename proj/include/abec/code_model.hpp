#pragma once

#include <compare>
#include <string>
#include <vector>

#include "abec/gf.hpp"

namespace abec {

inline int mod_k(int a, int k) {
  int m = a % k;
  return m < 0 ? m + k : m;
}

// Parameters of an (n, k) code built from an (n_a, k) Class A code and
// n - n_a Class B parity nodes, with tau piggybacks per row.
struct CodeParams {
  int n = 0;
  int k = 0;
  int n_a = 0;
  int tau = 0;
  FieldSpec field;

  int n_b() const { return n - n_a + k; }
  int class_a_count() const { return n_a - k; }
  int class_b_count() const { return n - n_a; }
  // Column layout: [0, k) data, [k, n_a) Class A, [n_a, n) Class B.
  bool is_data_col(int col) const { return col >= 0 && col < k; }
  bool is_class_a_col(int col) const { return col >= k && col < n_a; }
  bool is_class_b_col(int col) const { return col >= n_a && col < n; }

  static CodeParams make(int n, int k, int n_a, int tau, FieldSpec fs = {});
  bool operator==(const CodeParams&) const = default;
};

// Empty string when all invariants hold, otherwise the violated constraint.
std::string validate(const CodeParams& p);

struct SymbolPos {
  int row = 0;
  int col = 0;
  auto operator<=>(const SymbolPos&) const = default;
};

struct OpCount {
  long mults = 0;
  long adds = 0;
};

// One parity symbol as a coefficient-weighted sum of data symbols. `scaled`
// terms cost a field multiplication when evaluated; unit terms (piggybacks,
// Class B sums) are added directly.
struct Term {
  SymbolPos pos;
  Symbol coeff = 1;
  bool scaled = false;
  bool operator==(const Term&) const = default;
};

struct ParityEquation {
  SymbolPos target;
  std::vector<Term> terms;

  bool contains(SymbolPos p) const;
  // Evaluates over a k x k row-major data block.
  Symbol evaluate(const Field& f, const std::vector<Symbol>& data, int k,
                  OpCount* ops = nullptr) const;
  bool operator==(const ParityEquation&) const = default;
};

// k x n grid of symbols: data block plus all parity columns.
struct CodeArray {
  CodeParams params;
  std::vector<Symbol> cells;

  explicit CodeArray(CodeParams p)
      : params(p), cells(std::size_t(p.k) * p.n, 0) {}
  Symbol& at(int r, int c) { return cells[std::size_t(r) * params.n + c]; }
  Symbol at(int r, int c) const { return cells[std::size_t(r) * params.n + c]; }
  std::vector<Symbol> data_block() const;
  std::vector<Symbol> column(int c) const;
  void set_column(int c, const std::vector<Symbol>& col);
};

// R_j: the k-1 data symbols read from row j during Class A repair of node j.
std::vector<SymbolPos> set_R(int j, const CodeParams& p);
// Q_j: the k-tau-1 symbols of node j not recovered through Class A parities.
std::vector<SymbolPos> set_Q(int j, const CodeParams& p);
// X_j = R_j intersected with the union of all Q_l.
std::vector<SymbolPos> set_X(int j, const CodeParams& p);
// Wrapped diagonal of length k through (i, j).
std::vector<SymbolPos> set_Dtilde(int i, int j, const CodeParams& p);

bool in_Q(SymbolPos d, const CodeParams& p);
bool in_X(int j, SymbolPos d, const CodeParams& p);

}  // namespace abec
