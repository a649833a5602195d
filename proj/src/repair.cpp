#include "abec/repair.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "abec/linalg.hpp"

namespace abec {

namespace {

// Read/cache bookkeeping for a single-node repair. Values of the failed
// column come only from the recovered map.
class RepairSession {
 public:
  RepairSession(const Codec& codec, const CodeArray& arr, int failed,
                RepairReport& report)
      : codec_(codec), arr_(arr), failed_(failed), report_(report) {}

  Symbol read(SymbolPos pos) {
    if (pos.col == failed_) throw Error("attempted read from the failed node");
    if (cached_.insert(pos).second) report_.reads.push_back(pos);
    return arr_.at(pos.row, pos.col);
  }

  bool cached(SymbolPos pos) const { return cached_.contains(pos); }

  Symbol value(SymbolPos pos) {
    if (pos.col == failed_) return recovered_.at(pos);
    return read(pos);
  }

  void recover(SymbolPos pos, Symbol v) {
    recovered_[pos] = v;
    report_.recovered.emplace_back(pos, v);
  }

  bool recovered(SymbolPos pos) const { return recovered_.contains(pos); }
  Symbol recovered_value(SymbolPos pos) const { return recovered_.at(pos); }

 private:
  const Codec& codec_;
  const CodeArray& arr_;
  int failed_;
  RepairReport& report_;
  std::set<SymbolPos> cached_;
  std::map<SymbolPos, Symbol> recovered_;
};

// Solves the single unknown d_{row,j} of one row from the first pure-MDS
// parity column. Reads the row's surviving data symbols plus that parity.
Symbol solve_row(RepairSession& s, const Codec& codec, int row, int j,
                 RepairReport& report) {
  const CodeParams& p = codec.params;
  const Field& f = codec.field;
  Symbol acc = s.read({row, p.k});  // first Class A column is never piggybacked
  for (int c = 0; c < p.k; ++c) {
    if (c == j) continue;
    acc = f.sub(acc, f.mul(codec.alpha.at(c, 0), s.read({row, c})));
    ++report.ops.mults;
    ++report.ops.adds;
  }
  acc = f.mul(acc, f.inv(codec.alpha.at(j, 0)));
  ++report.ops.mults;
  return acc;
}

}  // namespace

std::pair<std::vector<Symbol>, RepairReport> repair_data_node(
    const Codec& codec, const CodeArray& arr, int failed) {
  const CodeParams& p = codec.params;
  const Field& f = codec.field;
  if (failed < 0 || failed >= p.k)
    throw NotSingleDataFailure("failed node is not a data node");
  const int j = failed;

  RepairReport report;
  report.failed_node = j;
  RepairSession s(codec, arr, j, report);

  // Class A phase: solve the diagonal symbol from the cached row, then strip
  // the MDS part off each piggybacked parity.
  for (SymbolPos pos : set_R(j, p)) s.read(pos);
  s.recover({j, j}, solve_row(s, codec, j, j, report));

  for (int u = p.n_a - p.tau; u < p.n_a; ++u) {
    const int shift = piggyback_shift(p, u);
    Symbol acc = s.read({j, u});
    for (int l = 0; l < p.k; ++l) {
      const Symbol d = l == j ? s.recovered_value({j, j}) : s.value({j, l});
      acc = f.sub(acc, f.mul(codec.alpha.at(l, u - p.k), d));
      ++report.ops.mults;
      ++report.ops.adds;
    }
    s.recover({mod_k(j + shift, p.k), j}, acc);
  }

  // Class B phase: one designated parity per remaining symbol; cached terms
  // cost nothing.
  for (SymbolPos d : set_Q(j, p)) {
    const auto parity = find_designated(d, p, codec.class_b);
    if (!parity) {
      report.notes.push_back("class_a_fallback row " + std::to_string(d.row));
      s.recover(d, solve_row(s, codec, d.row, j, report));
      continue;
    }
    const ParityEquation& eq = class_b_equation(codec.class_b, p, *parity);
    Symbol acc = s.read(eq.target);
    for (const Term& t : eq.terms) {
      if (t.pos == d) continue;
      acc = f.sub(acc, s.value(t.pos));
      ++report.ops.adds;
    }
    s.recover(d, acc);
  }

  std::vector<Symbol> column(p.k);
  for (int r = 0; r < p.k; ++r) column[r] = s.recovered_value({r, j});
  return {column, report};
}

std::optional<std::vector<Symbol>> decode_erasures(
    const Codec& codec, const CodeArray& arr, const std::vector<int>& erased) {
  const CodeParams& p = codec.params;
  const Field& f = codec.field;
  const std::set<int> gone(erased.begin(), erased.end());

  std::vector<SymbolPos> unknowns;
  std::map<SymbolPos, int> index;
  for (int c : gone) {
    if (!p.is_data_col(c)) continue;
    for (int r = 0; r < p.k; ++r) {
      index[{r, c}] = int(unknowns.size());
      unknowns.push_back({r, c});
    }
  }

  std::vector<Symbol> data(std::size_t(p.k) * p.k, 0);
  for (int c = 0; c < p.k; ++c) {
    if (gone.contains(c)) continue;
    for (int r = 0; r < p.k; ++r) data[std::size_t(r) * p.k + c] = arr.at(r, c);
  }
  if (unknowns.empty()) return data;

  std::vector<std::vector<Symbol>> rows;
  std::vector<Symbol> rhs;
  for (int col = p.k; col < p.n; ++col) {
    if (gone.contains(col)) continue;
    for (int r = 0; r < p.k; ++r) {
      const ParityEquation& eq = codec.parity_equation(r, col);
      std::vector<Symbol> row(unknowns.size(), 0);
      Symbol b = arr.at(r, col);
      bool touches = false;
      for (const Term& t : eq.terms) {
        const Symbol coeff = t.scaled ? t.coeff : Symbol(1);
        if (auto it = index.find(t.pos); it != index.end()) {
          row[it->second] = f.add(row[it->second], coeff);
          touches = true;
        } else {
          b = f.sub(b, f.mul(coeff, arr.at(t.pos.row, t.pos.col)));
        }
      }
      if (!touches) continue;
      rows.push_back(std::move(row));
      rhs.push_back(b);
    }
  }

  Matrix sys(int(rows.size()), int(unknowns.size()));
  for (int r = 0; r < sys.rows; ++r)
    for (int c = 0; c < sys.cols; ++c) sys.at(r, c) = rows[r][c];
  const auto x = solve(f, sys, rhs);
  if (!x) return std::nullopt;
  for (std::size_t i = 0; i < unknowns.size(); ++i)
    data[std::size_t(unknowns[i].row) * p.k + unknowns[i].col] = (*x)[i];
  return data;
}

void for_each_combination(
    int n, int e, const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> c(e);
  for (int i = 0; i < e; ++i) c[i] = i;
  if (e == 0 || e > n) return;
  while (true) {
    if (!fn(c)) return;
    int i = e - 1;
    while (i >= 0 && c[i] == n - e + i) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < e; ++j) c[j] = c[j - 1] + 1;
  }
}

FaultToleranceReport verify_fault_tolerance(const Codec& codec, int f,
                                            std::uint64_t seed) {
  const CodeParams& p = codec.params;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> dist(0, codec.field.order() - 1);
  std::vector<Symbol> data(std::size_t(p.k) * p.k);
  for (Symbol& d : data) d = Symbol(dist(rng));
  const CodeArray arr = codec.encode(data);

  FaultToleranceReport report;
  report.max_erasures = f;

  const auto check = [&](const std::vector<int>& pattern) {
    ++report.patterns_checked;
    const auto got = decode_erasures(codec, arr, pattern);
    if (!got || *got != data) {
      report.pass = false;
      if (report.failing.size() < 64) report.failing.push_back(pattern);
    }
    return true;
  };

  if (p.n <= 16) {
    for (int e = 1; e <= f; ++e) for_each_combination(p.n, e, check);
  } else {
    report.exhaustive = false;
    for (int e = 1; e <= f; ++e) {
      std::vector<int> nodes(p.n);
      for (int i = 0; i < p.n; ++i) nodes[i] = i;
      for (int trial = 0; trial < 2000; ++trial) {
        std::shuffle(nodes.begin(), nodes.end(), rng);
        std::vector<int> pattern(nodes.begin(), nodes.begin() + e);
        std::sort(pattern.begin(), pattern.end());
        check(pattern);
      }
    }
  }
  return report;
}

std::vector<Symbol> repair_parity_node(const Codec& codec, const CodeArray& arr,
                                       int failed) {
  const CodeParams& p = codec.params;
  if (failed < p.k || failed >= p.n)
    throw NotParityNode("node is not a parity node");
  const std::vector<Symbol> data = arr.data_block();
  std::vector<Symbol> col(p.k);
  for (int r = 0; r < p.k; ++r)
    col[r] = codec.parity_equation(r, failed).evaluate(codec.field, data, p.k);
  return col;
}

}  // namespace abec
