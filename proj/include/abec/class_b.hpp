#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "abec/code_model.hpp"

namespace abec {

// k x k matrix of designated additional read costs. `kInfinite` marks symbols
// not yet covered by any Class B parity.
struct ReadCostMatrix {
  static constexpr int kInfinite = std::numeric_limits<int>::max();

  int k = 0;
  std::vector<int> v;

  explicit ReadCostMatrix(int k_) : k(k_), v(std::size_t(k_) * k_, 1) {}
  int& at(int r, int c) { return v[std::size_t(r) * k + c]; }
  int at(int r, int c) const { return v[std::size_t(r) * k + c]; }
  bool operator==(const ReadCostMatrix&) const = default;
};

// Additional symbols read to recover d through eq, given that the row set of
// d's column is already cached: |terms(eq) \ X_j| where d is in Q_j.
// Throws NotMember when d is not a term of eq or not in any Q_j.
int read_cost(SymbolPos d, const ParityEquation& eq, const CodeParams& p);

// Cost matrix after Class A decoding: infinite on the union of the Q sets,
// k on the diagonal, 1 elsewhere.
ReadCostMatrix init_read_costs(const CodeParams& p);

// Class B parity nodes in construction order. Node m stores the k equations
// of column n_a + m; equation t of a node is equation 0 shifted by (+t, +t).
struct ClassBPlan {
  std::vector<std::vector<ParityEquation>> nodes;
  ReadCostMatrix final_costs{0};
};

// Greedy construction of the n - n_a Class B parity nodes, driven by the
// read-cost matrix. Throws NoClassBNodes when n == n_a.
ClassBPlan build_class_b(const CodeParams& p);

// Cost matrix implied by a (possibly punctured) set of nodes: cost through
// each symbol's designated parity, infinite when uncovered.
ReadCostMatrix plan_read_costs(const CodeParams& p, const ClassBPlan& plan);

// The Class B parity used to repair d: among the equations containing d, the
// one in the highest-indexed node. Nullopt when no equation covers d.
std::optional<SymbolPos> find_designated(SymbolPos d, const CodeParams& p,
                                         const ClassBPlan& plan);
// Same, but throws Uncovered instead of returning nullopt.
SymbolPos designated_parity(SymbolPos d, const CodeParams& p,
                            const ClassBPlan& plan);

const ParityEquation& class_b_equation(const ClassBPlan& plan,
                                       const CodeParams& p, SymbolPos parity);

}  // namespace abec
