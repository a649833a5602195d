#pragma once

#include <vector>

#include "abec/code_model.hpp"
#include "abec/linalg.hpp"

namespace abec {

// Systematic Reed-Solomon coefficient block alpha[l][j-k], l in [0,k),
// j in [k, n_a): parity column j of the (n_a, k) MDS code is
// sum_l alpha[l][j-k] * d[l]. Evaluation points are the field elements
// 0 .. n_a-1. Throws FieldTooSmall when 2^w <= n_a.
Matrix mds_coefficients(const CodeParams& p, const Field& f);

// Every k x k submatrix of [I | alpha] is invertible. Exhaustive over all
// C(n_a, k) column choices; desk-scale parameters only.
bool mds_property_holds(const CodeParams& p, const Field& f,
                        const Matrix& alpha);

// Row shift of the piggyback carried by parity column u: the piggyback added
// to row i references d[(i+shift) mod k][i]. Throws NotPiggybacked unless
// n_a - tau <= u < n_a.
int piggyback_shift(const CodeParams& p, int u);

// The k * (n_a - k) Class A parity equations, piggybacks included, ordered by
// column then row.
std::vector<ParityEquation> class_a_equations(const CodeParams& p,
                                              const Matrix& alpha);

// Evaluates the Class A parity block for a k x k data array; returns a
// k x (n_a - k) row-major grid.
std::vector<Symbol> encode_class_a(const CodeParams& p, const Field& f,
                                   const std::vector<ParityEquation>& eqs,
                                   const std::vector<Symbol>& data,
                                   OpCount* ops = nullptr);

// The k x k^2 system matrix tying the data array to the piggybacked parity
// column u (unknowns ordered d_{0,0},...,d_{k-1,k-1}).
Matrix piggyback_system_matrix(const CodeParams& p, const Matrix& alpha, int u);

// The k x k subsystem for a failed data node r: alpha_{r,u} on the diagonal
// plus a single unit entry at (r, (r+shift) mod k).
Matrix piggyback_subsystem(const CodeParams& p, const Matrix& alpha, int u,
                           int r);

}  // namespace abec
