#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "abec/manifest.hpp"
#include "abec/repair.hpp"

namespace abec {

// File-per-node store layout: <dir>/node_NN.dat plus <dir>/manifest.json.
// Failed nodes are renamed to node_NN.dat.failed.
struct NodeStore {
  std::filesystem::path dir;

  std::filesystem::path node_file(int i) const;
  std::filesystem::path failed_file(int i) const;
  std::filesystem::path manifest_file() const;
  bool node_failed(int i) const;
};

// Byte <-> symbol packing. Supported widths: 1, 2, 4, 8 (8/w symbols per
// byte) and 16 (one symbol per two bytes, little endian).
std::vector<Symbol> bytes_to_symbols(const std::vector<std::uint8_t>& bytes,
                                     unsigned width);
std::vector<std::uint8_t> symbols_to_bytes(const std::vector<Symbol>& symbols,
                                           unsigned width);
// Bytes each symbol occupies inside a node file.
unsigned stored_symbol_bytes(unsigned width);

// Shards and encodes a file across n node files, one k-symbol column per
// stripe per node, and writes the manifest alongside.
Manifest ingest(const std::filesystem::path& input, const Codec& codec,
                const std::filesystem::path& dir);

void fail_node(const NodeStore& store, int node);

struct StoreRepairResult {
  std::vector<int> repaired;
  std::uint64_t stripes = 0;
  RepairReport per_stripe;     // single-data-node path; pattern is identical
                               // across stripes (data independent)
  std::uint64_t total_reads = 0;
  double lambda = 0.0;         // per-stripe reads / k
  bool parity_reencode = false;
  bool generic_decode = false;
};

// Restores every failed node file. Routes one failed data node through the
// scheduled repair, one failed parity node through re-encoding, and anything
// else through generic erasure decoding. Throws Undecodable when the pattern
// is beyond the code.
StoreRepairResult repair_store(const NodeStore& store);

// Concatenates the data node files back into the original bytes.
std::vector<std::uint8_t> reassemble(const NodeStore& store);

std::vector<std::uint8_t> read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p,
                const std::vector<std::uint8_t>& bytes);

}  // namespace abec
