#pragma once

#include <vector>

#include "abec/class_a.hpp"
#include "abec/class_b.hpp"

namespace abec {

// A fully constructed code: parameters, MDS coefficients and every parity
// equation. Immutable after build; concurrently readable.
struct Codec {
  CodeParams params;
  Field field;
  Matrix alpha;
  std::vector<ParityEquation> class_a;
  ClassBPlan class_b;

  static Codec build(const CodeParams& p);

  const ParityEquation& parity_equation(int row, int col) const;
  std::vector<const ParityEquation*> node_equations(int col) const;

  CodeArray encode(const std::vector<Symbol>& data,
                   OpCount* ops = nullptr) const;

  // Removes the highest-indexed Class B node (n decreases by one).
  Codec punctured() const;
};

}  // namespace abec
