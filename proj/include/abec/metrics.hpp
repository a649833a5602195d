#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abec/code_model.hpp"
#include "abec/repair.hpp"

namespace abec {

// Symbols read per repaired node symbol: |reads| / k.
double normalized_bandwidth(const RepairReport& report, const CodeParams& p);

// Closed-form bound (k + tau + (k-tau-1)^2) / k for a full Class B set.
double lambda_upper_bound(const CodeParams& p);

// Operation counts in elementary bit-operation units: an addition weighs
// nu, a multiplication nu^2, with nu the symbol width in bits.
struct ComplexityEstimate {
  long bit_additions = 0;
  long bit_mults = 0;
  std::string label;

  long total() const { return bit_additions + bit_mults; }
};

// Closed-form repair complexity of one failed node,
// C_R = (k-1)nu + k nu^2 + tau k (nu + nu^2) + (k-tau-2)^2 nu.
ComplexityEstimate repair_complexity(const CodeParams& p);

struct EncodingComplexity {
  ComplexityEstimate class_a;  // (n_a-k)(k nu^2 + (k-1)nu) + tau nu
  ComplexityEstimate class_b;  // sum_{i=1..n-n_a} (k-tau-1-i) nu
  ComplexityEstimate total() const;
};

EncodingComplexity encoding_complexity(const CodeParams& p);

// Measured counts converted at the same weights.
long measured_bit_ops(const OpCount& ops, unsigned nu);

// Extra symbols some baseline formulas need (defined by the schemes cited in
// the comparison table; treated as opaque inputs here).
struct BaselineInputs {
  std::optional<long> lrc_r;
  std::optional<long> pb_t;
  std::optional<long> pb_t_r;
  std::optional<long> pb_ell;
};

// One comparison-table row. Missing values ("--" cells) are nullopt and
// rendered as "not specified".
struct BaselineRow {
  std::string scheme;
  std::optional<double> beta;
  std::optional<double> fault_tolerance;
  std::optional<double> lambda;
  std::optional<double> repair_complexity;
  std::optional<double> encoding_complexity;
  std::string note;
};

BaselineRow baseline_row(const std::string& scheme, const CodeParams& p,
                         const BaselineInputs& in);

// Rows MDS, LRC, MDR, Zigzag, Piggyback, Proposed. Throws MissingParameter
// when a needed extra symbol is absent.
std::vector<BaselineRow> baseline_table(const CodeParams& p,
                                        const BaselineInputs& in);

struct CsvRow {
  std::string scheme;
  int n = 0;
  int k = 0;
  std::optional<double> f;
  std::optional<double> lambda;
  std::optional<double> repair_complexity;
  std::optional<double> encoding_complexity;
};

// Header: scheme,n,k,f,lambda,repair_complexity,encoding_complexity
std::string metrics_csv(const std::vector<CsvRow>& rows);

}  // namespace abec
