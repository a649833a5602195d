#include "abec/codec.hpp"

namespace abec {

Codec Codec::build(const CodeParams& p) {
  if (const std::string err = validate(p); !err.empty()) throw ParamError(err);
  Codec c{p, Field(p.field), {}, {}, {}};
  c.alpha = mds_coefficients(p, c.field);
  if (!mds_property_holds(p, c.field, c.alpha))
    throw ParamError("MDS property violated");  // unreachable for RS
  c.class_a = class_a_equations(p, c.alpha);
  if (p.class_b_count() > 0)
    c.class_b = build_class_b(p);
  else
    c.class_b.final_costs = init_read_costs(p);
  return c;
}

const ParityEquation& Codec::parity_equation(int row, int col) const {
  if (params.is_class_a_col(col))
    return class_a[std::size_t(col - params.k) * params.k + row];
  if (params.is_class_b_col(col))
    return class_b_equation(class_b, params, {row, col});
  throw ParamError("not a parity column");
}

std::vector<const ParityEquation*> Codec::node_equations(int col) const {
  std::vector<const ParityEquation*> out;
  out.reserve(params.k);
  for (int r = 0; r < params.k; ++r) out.push_back(&parity_equation(r, col));
  return out;
}

CodeArray Codec::encode(const std::vector<Symbol>& data, OpCount* ops) const {
  CodeArray arr(params);
  for (int r = 0; r < params.k; ++r)
    for (int c = 0; c < params.k; ++c)
      arr.at(r, c) = data[std::size_t(r) * params.k + c];
  for (int col = params.k; col < params.n; ++col)
    for (int r = 0; r < params.k; ++r)
      arr.at(r, col) = parity_equation(r, col).evaluate(field, data, params.k, ops);
  return arr;
}

Codec Codec::punctured() const {
  if (params.class_b_count() == 0)
    throw NoClassBNodes("no Class B node left to puncture");
  Codec c = *this;
  c.params.n -= 1;
  c.class_b.nodes.pop_back();
  c.class_b.final_costs = plan_read_costs(c.params, c.class_b);
  return c;
}

}  // namespace abec
