#include "abec/code_model.hpp"

#include <algorithm>

namespace abec {

CodeParams CodeParams::make(int n, int k, int n_a, int tau, FieldSpec fs) {
  CodeParams p{n, k, n_a, tau, fs};
  if (const std::string err = validate(p); !err.empty()) throw ParamError(err);
  return p;
}

std::string validate(const CodeParams& p) {
  if (p.k < 2) return "k must be at least 2";
  if (!(p.k + 2 <= p.n_a)) return "n_a must satisfy k + 2 <= n_a";
  if (!(p.n_a < 2 * p.k)) return "n_a must satisfy n_a < 2k";
  if (!(1 <= p.tau)) return "tau must be at least 1";
  if (!(p.tau <= p.n_a - p.k - 1)) return "tau must satisfy tau <= n_a - k - 1";
  if (p.n < p.n_a) return "n must satisfy n >= n_a";
  if (p.n - p.n_a > p.k - p.tau - 1)
    return "Class B node count n - n_a must not exceed k - tau - 1";
  if (p.field.width < 1 || p.field.width > 16)
    return "field width must be in [1, 16]";
  if (!((1u << p.field.width) > unsigned(p.n_a)))
    return "field order 2^w must exceed n_a";
  return {};
}

bool ParityEquation::contains(SymbolPos p) const {
  return std::any_of(terms.begin(), terms.end(),
                     [&](const Term& t) { return t.pos == p; });
}

Symbol ParityEquation::evaluate(const Field& f, const std::vector<Symbol>& data,
                                int k, OpCount* ops) const {
  Symbol acc = 0;
  bool first = true;
  for (const Term& t : terms) {
    Symbol v = data[std::size_t(t.pos.row) * k + t.pos.col];
    if (t.scaled) {
      v = f.mul(t.coeff, v);
      if (ops) ++ops->mults;
    }
    if (first) {
      acc = v;
      first = false;
    } else {
      acc = f.add(acc, v);
      if (ops) ++ops->adds;
    }
  }
  return acc;
}

std::vector<Symbol> CodeArray::data_block() const {
  std::vector<Symbol> d(std::size_t(params.k) * params.k);
  for (int r = 0; r < params.k; ++r)
    for (int c = 0; c < params.k; ++c) d[std::size_t(r) * params.k + c] = at(r, c);
  return d;
}

std::vector<Symbol> CodeArray::column(int c) const {
  std::vector<Symbol> col(params.k);
  for (int r = 0; r < params.k; ++r) col[r] = at(r, c);
  return col;
}

void CodeArray::set_column(int c, const std::vector<Symbol>& col) {
  for (int r = 0; r < params.k; ++r) at(r, c) = col[r];
}

std::vector<SymbolPos> set_R(int j, const CodeParams& p) {
  if (j < 0 || j >= p.k) throw ParamError("node index out of range");
  std::vector<SymbolPos> out;
  out.reserve(p.k - 1);
  for (int s = 1; s <= p.k - 1; ++s) out.push_back({j, mod_k(j + s, p.k)});
  return out;
}

std::vector<SymbolPos> set_Q(int j, const CodeParams& p) {
  if (j < 0 || j >= p.k) throw ParamError("node index out of range");
  std::vector<SymbolPos> out;
  out.reserve(p.k - p.tau - 1);
  for (int s = p.tau + 1; s <= p.k - 1; ++s)
    out.push_back({mod_k(j + s, p.k), j});
  return out;
}

std::vector<SymbolPos> set_X(int j, const CodeParams& p) {
  if (j < 0 || j >= p.k) throw ParamError("node index out of range");
  std::vector<SymbolPos> out;
  out.reserve(p.k - p.tau - 1);
  for (int s = 1; s <= p.k - p.tau - 1; ++s)
    out.push_back({j, mod_k(j + s, p.k)});
  return out;
}

std::vector<SymbolPos> set_Dtilde(int i, int j, const CodeParams& p) {
  if (i < 0 || i >= p.k || j < 0 || j >= p.k)
    throw ParamError("symbol index out of range");
  std::vector<SymbolPos> out;
  out.reserve(p.k);
  for (int s = 0; s < p.k; ++s)
    out.push_back({mod_k(i + s, p.k), mod_k(j + s, p.k)});
  return out;
}

bool in_Q(SymbolPos d, const CodeParams& p) {
  if (d.col < 0 || d.col >= p.k || d.row < 0 || d.row >= p.k) return false;
  const int off = mod_k(d.row - d.col, p.k);
  return off >= p.tau + 1 && off <= p.k - 1;
}

bool in_X(int j, SymbolPos d, const CodeParams& p) {
  if (d.row != j) return false;
  const int off = mod_k(d.col - j, p.k);
  return off >= 1 && off <= p.k - p.tau - 1;
}

}  // namespace abec
