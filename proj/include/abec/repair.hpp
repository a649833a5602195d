#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abec/codec.hpp"

namespace abec {

// What a single-node repair read and produced. Reads are deduplicated:
// symbols already cached are never listed twice and never re-read.
struct RepairReport {
  int failed_node = -1;
  std::vector<SymbolPos> reads;
  std::vector<std::pair<SymbolPos, Symbol>> recovered;
  OpCount ops;
  std::vector<std::string> notes;
  bool parity_reencode = false;
};

// Repairs data node `failed` from the surviving columns of `arr` using the
// two-phase schedule: row solve plus piggyback extraction through Class A,
// then one designated Class B parity per remaining symbol. Falls back to a
// per-row Class A solve for symbols left uncovered by puncturing.
std::pair<std::vector<Symbol>, RepairReport> repair_data_node(
    const Codec& codec, const CodeArray& arr, int failed);

// Generic erasure decoding: solves for the data symbols of all erased data
// nodes from the surviving parity equations. Nullopt when the surviving
// system is rank deficient.
std::optional<std::vector<Symbol>> decode_erasures(
    const Codec& codec, const CodeArray& arr, const std::vector<int>& erased);

struct FaultToleranceReport {
  bool pass = true;
  int max_erasures = 0;
  long patterns_checked = 0;
  bool exhaustive = true;
  std::vector<std::vector<int>> failing;  // capped at 64 patterns
};

// Tries every erasure pattern of 1..f nodes (exhaustive for n <= 16,
// seeded sampling above that) against a random data array.
FaultToleranceReport verify_fault_tolerance(const Codec& codec, int f,
                                            std::uint64_t seed = 1);

// Re-evaluates the parity equations of an erased parity column.
std::vector<Symbol> repair_parity_node(const Codec& codec,
                                       const CodeArray& arr, int failed);

// Enumerates e-element subsets of [0, n) in lexicographic order.
void for_each_combination(int n, int e,
                          const std::function<bool(const std::vector<int>&)>& fn);

}  // namespace abec
