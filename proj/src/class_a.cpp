#include "abec/class_a.hpp"

#include <functional>

namespace abec {

Matrix mds_coefficients(const CodeParams& p, const Field& f) {
  if (f.order() <= unsigned(p.n_a))
    throw FieldTooSmall("field order 2^w must exceed n_a");
  const int k = p.k;
  // Vandermonde rows on evaluation points 0..n_a-1; systematic form via the
  // inverse of the top k x k block.
  Matrix vand(p.n_a, k);
  for (int r = 0; r < p.n_a; ++r)
    for (int c = 0; c < k; ++c) vand.at(r, c) = f.pow(Symbol(r), unsigned(c));
  Matrix top(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) top.at(r, c) = vand.at(r, c);
  const auto top_inv = invert(f, top);
  if (!top_inv)
    throw ParamError("Vandermonde block is singular");  // unreachable: points distinct
  const Matrix gen = matmul(f, vand, *top_inv);
  Matrix alpha(k, p.n_a - k);
  for (int j = k; j < p.n_a; ++j)
    for (int l = 0; l < k; ++l) alpha.at(l, j - k) = gen.at(j, l);
  return alpha;
}

bool mds_property_holds(const CodeParams& p, const Field& f,
                        const Matrix& alpha) {
  // Systematic generator [I | alpha^T rows]: row l = unit_l, column j >= k
  // carries alpha[l][j-k].
  const int k = p.k;
  std::vector<int> pick(k);
  std::function<bool(int, int)> scan = [&](int idx, int from) {
    if (idx == k) {
      Matrix sub(k, k);
      for (int c = 0; c < k; ++c) {
        const int col = pick[c];
        for (int l = 0; l < k; ++l)
          sub.at(l, c) = col < k ? Symbol(l == col) : alpha.at(l, col - k);
      }
      return determinant(f, sub) != 0;
    }
    for (int col = from; col <= p.n_a - (k - idx); ++col) {
      pick[idx] = col;
      if (!scan(idx + 1, col + 1)) return false;
    }
    return true;
  };
  return scan(0, 0);
}

int piggyback_shift(const CodeParams& p, int u) {
  if (u < p.n_a - p.tau || u >= p.n_a)
    throw NotPiggybacked("parity column carries no piggyback");
  return u - p.n_a + p.tau + 1;
}

std::vector<ParityEquation> class_a_equations(const CodeParams& p,
                                              const Matrix& alpha) {
  std::vector<ParityEquation> eqs;
  eqs.reserve(std::size_t(p.k) * (p.n_a - p.k));
  for (int j = p.k; j < p.n_a; ++j) {
    for (int i = 0; i < p.k; ++i) {
      ParityEquation eq;
      eq.target = {i, j};
      for (int l = 0; l < p.k; ++l)
        eq.terms.push_back({{i, l}, alpha.at(l, j - p.k), true});
      if (j >= p.n_a - p.tau) {
        const int s = piggyback_shift(p, j);
        eq.terms.push_back({{mod_k(i + s, p.k), i}, 1, false});
      }
      eqs.push_back(std::move(eq));
    }
  }
  return eqs;
}

std::vector<Symbol> encode_class_a(const CodeParams& p, const Field& f,
                                   const std::vector<ParityEquation>& eqs,
                                   const std::vector<Symbol>& data,
                                   OpCount* ops) {
  std::vector<Symbol> out(std::size_t(p.k) * (p.n_a - p.k), 0);
  for (const ParityEquation& eq : eqs) {
    const Symbol v = eq.evaluate(f, data, p.k, ops);
    out[std::size_t(eq.target.row) * (p.n_a - p.k) + (eq.target.col - p.k)] = v;
  }
  return out;
}

Matrix piggyback_system_matrix(const CodeParams& p, const Matrix& alpha,
                               int u) {
  const int k = p.k;
  const int s = piggyback_shift(p, u);
  Matrix g(k, k * k);
  for (int i = 0; i < k; ++i) {
    for (int l = 0; l < k; ++l) g.at(i, i * k + l) = alpha.at(l, u - k);
    g.at(i, mod_k(i + s, k) * k + i) ^= 1;
  }
  return g;
}

Matrix piggyback_subsystem(const CodeParams& p, const Matrix& alpha, int u,
                           int r) {
  const int k = p.k;
  const int s = piggyback_shift(p, u);
  Matrix g(k, k);
  for (int i = 0; i < k; ++i) g.at(i, i) = alpha.at(r, u - k);
  g.at(r, mod_k(r + s, k)) ^= 1;
  return g;
}

}  // namespace abec
