#include "abec/class_b.hpp"

#include <algorithm>

namespace abec {

namespace {

// True when d_{0,i} is a usable mirror for seed d_{i,0}: it lies in X_0 and
// off the wrapped diagonal through (i, 0).
bool mirror_usable(int i, const CodeParams& p) {
  if (!(i >= 1 && i <= p.k - p.tau - 1)) return false;  // X_0 membership
  return mod_k(2 * i, p.k) != 0;  // diagonal through (i,0) holds d_{0,(k-i)%k}
}

// Candidate columns i' for extending equation 0 of a node seeded at row i:
// d_{0,i'} in X_0 \ Dtilde_{i,0}, not already a term.
std::vector<int> extension_candidates(int seed, const ParityEquation& eq0,
                                      const CodeParams& p) {
  std::vector<int> out;
  for (int c = 1; c <= p.k - p.tau - 1; ++c) {
    if (c == mod_k(p.k - seed, p.k)) continue;  // on the seed diagonal
    if (eq0.contains({0, c})) continue;
    out.push_back(c);
  }
  return out;
}

ParityEquation extended(const ParityEquation& eq0, SymbolPos extra) {
  ParityEquation e = eq0;
  e.terms.push_back({extra, 1, false});
  return e;
}

// Adds the shift-image of d_{0,col} to every equation of the node.
void extend_node(std::vector<ParityEquation>& node, int col,
                 const CodeParams& p) {
  for (int t = 0; t < p.k; ++t)
    node[t].terms.push_back({{t, mod_k(col + t, p.k)}, 1, false});
}

}  // namespace

int read_cost(SymbolPos d, const ParityEquation& eq, const CodeParams& p) {
  if (!in_Q(d, p)) throw NotMember("symbol is not in any Q set");
  if (!eq.contains(d)) throw NotMember("symbol is not a term of the equation");
  const int j = d.col;
  int count = 0;
  for (const Term& t : eq.terms)
    if (!in_X(j, t.pos, p)) ++count;
  return count;
}

ReadCostMatrix init_read_costs(const CodeParams& p) {
  ReadCostMatrix a(p.k);
  for (int r = 0; r < p.k; ++r)
    for (int c = 0; c < p.k; ++c) {
      if (r == c)
        a.at(r, c) = p.k;
      else if (in_Q({r, c}, p))
        a.at(r, c) = ReadCostMatrix::kInfinite;
      else
        a.at(r, c) = 1;
    }
  return a;
}

ReadCostMatrix plan_read_costs(const CodeParams& p, const ClassBPlan& plan) {
  ReadCostMatrix a = init_read_costs(p);
  for (int r = 0; r < p.k; ++r)
    for (int c = 0; c < p.k; ++c) {
      if (!in_Q({r, c}, p)) continue;
      // Cost through the highest-indexed node covering the symbol; later
      // nodes hold shorter equations, so this is the designated read cost.
      for (int m = int(plan.nodes.size()) - 1; m >= 0; --m) {
        const auto& node = plan.nodes[m];
        auto it = std::find_if(node.begin(), node.end(),
                               [&](const ParityEquation& eq) {
                                 return eq.contains({r, c});
                               });
        if (it != node.end()) {
          a.at(r, c) = read_cost({r, c}, *it, p);
          break;
        }
      }
    }
  return a;
}

ClassBPlan build_class_b(const CodeParams& p) {
  const int count = p.class_b_count();
  if (count == 0) throw NoClassBNodes("code has no Class B parity nodes");
  const int k = p.k;

  ClassBPlan plan;
  ReadCostMatrix a = init_read_costs(p);
  const auto refresh = [&] { a = plan_read_costs(p, plan); };

  for (int m = 0; m < count; ++m) {
    const int omega = p.n_a + m;
    const int max_itr = k - p.tau - 2 - m;

    // Seed: d_{i,0} in Q_0 of maximal cost. Among the maximal candidates a
    // usable mirror d_{0,i} is preferred; ties go to the lowest row index.
    int max_cost = -1;
    for (int i = p.tau + 1; i <= k - 1; ++i)  // Q_0 rows are the offsets
      max_cost = std::max(max_cost, a.at(i, 0));
    int seed = -1;
    bool seed_has_mirror = false;
    for (int pass = 0; pass < 2 && seed < 0; ++pass)
      for (int i = p.tau + 1; i <= k - 1; ++i) {
        if (a.at(i, 0) != max_cost) continue;
        if (pass == 0 && !mirror_usable(i, p)) continue;
        seed = i;
        seed_has_mirror = (pass == 0);
        break;
      }

    std::vector<ParityEquation> node(k);
    for (int t = 0; t < k; ++t) {
      node[t].target = {t, omega};
      node[t].terms.push_back({{mod_k(seed + t, k), t}, 1, false});
    }
    plan.nodes.push_back(std::move(node));
    auto& cur = plan.nodes.back();
    refresh();

    for (int itr = 1; itr <= max_itr; ++itr) {
      if (itr == 1 && seed_has_mirror) {
        const ParityEquation trial = extended(cur[0], {0, seed});
        if (read_cost({0, seed}, trial, p) < a.at(0, seed)) {
          extend_node(cur, seed, p);
          refresh();
          continue;
        }
      }
      // General step: first column whose cost is still above 1 and does not
      // worsen through the extended equation.
      for (int c : extension_candidates(seed, cur[0], p)) {
        if (a.at(0, c) <= 1) continue;
        const ParityEquation trial = extended(cur[0], {0, c});
        if (read_cost({0, c}, trial, p) <= a.at(0, c)) {
          extend_node(cur, c, p);
          refresh();
          break;
        }
      }
    }
  }

  plan.final_costs = a;
  return plan;
}

std::optional<SymbolPos> find_designated(SymbolPos d, const CodeParams& p,
                                         const ClassBPlan& plan) {
  for (int m = int(plan.nodes.size()) - 1; m >= 0; --m)
    for (const ParityEquation& eq : plan.nodes[m])
      if (eq.contains(d)) return eq.target;
  return std::nullopt;
}

SymbolPos designated_parity(SymbolPos d, const CodeParams& p,
                            const ClassBPlan& plan) {
  if (auto pos = find_designated(d, p, plan)) return *pos;
  throw Uncovered("no Class B equation covers the symbol");
}

const ParityEquation& class_b_equation(const ClassBPlan& plan,
                                       const CodeParams& p, SymbolPos parity) {
  const int m = parity.col - p.n_a;
  if (m < 0 || m >= int(plan.nodes.size()) || parity.row < 0 ||
      parity.row >= p.k)
    throw ParamError("parity position outside the Class B plan");
  return plan.nodes[m][parity.row];
}

}  // namespace abec
