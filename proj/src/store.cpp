#include "abec/store.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace abec {

namespace fs = std::filesystem;

namespace {

std::string node_name(int i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "node_%02d.dat", i);
  return buf;
}

std::vector<Symbol> file_symbols(const fs::path& p, unsigned width) {
  const auto bytes = read_file(p);
  const unsigned per = stored_symbol_bytes(width);
  std::vector<Symbol> out(bytes.size() / per);
  for (std::size_t i = 0; i < out.size(); ++i) {
    Symbol v = bytes[i * per];
    if (per == 2) v |= Symbol(bytes[i * per + 1]) << 8;
    out[i] = v;
  }
  return out;
}

std::vector<std::uint8_t> stored_bytes(const std::vector<Symbol>& symbols,
                                       unsigned width) {
  const unsigned per = stored_symbol_bytes(width);
  std::vector<std::uint8_t> out;
  out.reserve(symbols.size() * per);
  for (Symbol s : symbols) {
    out.push_back(std::uint8_t(s & 0xFF));
    if (per == 2) out.push_back(std::uint8_t(s >> 8));
  }
  return out;
}

}  // namespace

fs::path NodeStore::node_file(int i) const { return dir / node_name(i); }
fs::path NodeStore::failed_file(int i) const {
  return dir / (node_name(i) + ".failed");
}
fs::path NodeStore::manifest_file() const { return dir / "manifest.json"; }
bool NodeStore::node_failed(int i) const {
  return !fs::exists(node_file(i));
}

unsigned stored_symbol_bytes(unsigned width) {
  if (width == 0 || (width > 8 && width != 16) || (width <= 8 && 8 % width != 0))
    throw ParamError("storage supports symbol widths 1, 2, 4, 8 and 16");
  return width == 16 ? 2 : 1;
}

std::vector<Symbol> bytes_to_symbols(const std::vector<std::uint8_t>& bytes,
                                     unsigned width) {
  stored_symbol_bytes(width);
  std::vector<Symbol> out;
  if (width == 16) {
    out.resize((bytes.size() + 1) / 2, 0);
    for (std::size_t i = 0; i < bytes.size(); ++i)
      out[i / 2] |= Symbol(bytes[i]) << (8 * (i % 2));
  } else {
    const unsigned per = 8 / width;
    const Symbol mask = Symbol((1u << width) - 1);
    out.resize(bytes.size() * per);
    for (std::size_t i = 0; i < bytes.size(); ++i)
      for (unsigned s = 0; s < per; ++s)
        out[i * per + s] = Symbol(bytes[i] >> (s * width)) & mask;
  }
  return out;
}

std::vector<std::uint8_t> symbols_to_bytes(const std::vector<Symbol>& symbols,
                                           unsigned width) {
  stored_symbol_bytes(width);
  std::vector<std::uint8_t> out;
  if (width == 16) {
    out.resize(symbols.size() * 2);
    for (std::size_t i = 0; i < symbols.size(); ++i) {
      out[2 * i] = std::uint8_t(symbols[i] & 0xFF);
      out[2 * i + 1] = std::uint8_t(symbols[i] >> 8);
    }
  } else {
    const unsigned per = 8 / width;
    out.assign((symbols.size() + per - 1) / per, 0);
    for (std::size_t i = 0; i < symbols.size(); ++i)
      out[i / per] |= std::uint8_t(symbols[i] << ((i % per) * width));
  }
  return out;
}

std::vector<std::uint8_t> read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw IoError("cannot read " + p.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const fs::path& p, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + p.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            std::streamsize(bytes.size()));
}

Manifest ingest(const fs::path& input, const Codec& codec,
                const fs::path& dir) {
  const CodeParams& p = codec.params;
  const unsigned w = p.field.width;
  const std::size_t stripe_symbols = std::size_t(p.k) * p.k;

  const auto bytes = read_file(input);
  std::vector<Symbol> symbols = bytes_to_symbols(bytes, w);
  const std::size_t stripes =
      std::max<std::size_t>(1, (symbols.size() + stripe_symbols - 1) / stripe_symbols);
  symbols.resize(stripes * stripe_symbols, 0);

  fs::create_directories(dir);
  std::vector<std::vector<Symbol>> columns(p.n);
  for (auto& c : columns) c.reserve(stripes * p.k);

  std::vector<Symbol> data(stripe_symbols);
  for (std::size_t s = 0; s < stripes; ++s) {
    // Stripe layout is column major: node j's share is contiguous input.
    const Symbol* in = symbols.data() + s * stripe_symbols;
    for (int col = 0; col < p.k; ++col)
      for (int row = 0; row < p.k; ++row)
        data[std::size_t(row) * p.k + col] = in[std::size_t(col) * p.k + row];
    const CodeArray arr = codec.encode(data);
    for (int col = 0; col < p.n; ++col)
      for (int row = 0; row < p.k; ++row) columns[col].push_back(arr.at(row, col));
  }

  NodeStore store{dir};
  for (int col = 0; col < p.n; ++col)
    write_file(store.node_file(col), stored_bytes(columns[col], w));

  Manifest m = Manifest::from_codec(codec);
  m.ingest = IngestInfo{bytes.size(), stripes};
  save_manifest(m, store.manifest_file());
  return m;
}

void fail_node(const NodeStore& store, int node) {
  if (fs::exists(store.failed_file(node)))
    throw AlreadyFailed("node " + std::to_string(node) + " already failed");
  if (!fs::exists(store.node_file(node)))
    throw ParamError("node " + std::to_string(node) + " does not exist");
  fs::rename(store.node_file(node), store.failed_file(node));
}

StoreRepairResult repair_store(const NodeStore& store) {
  const Manifest m = load_manifest(store.manifest_file());
  const Codec codec = m.to_codec();
  const CodeParams& p = codec.params;
  const unsigned w = p.field.width;
  if (!m.ingest) throw ParamError("store manifest has no ingest record");
  const std::uint64_t stripes = m.ingest->stripe_count;

  StoreRepairResult result;
  result.stripes = stripes;
  for (int i = 0; i < p.n; ++i)
    if (store.node_failed(i)) result.repaired.push_back(i);
  if (result.repaired.empty()) return result;

  // Surviving columns, one symbol vector per node.
  std::vector<std::vector<Symbol>> columns(p.n);
  for (int i = 0; i < p.n; ++i)
    if (!store.node_failed(i)) columns[i] = file_symbols(store.node_file(i), w);

  std::vector<std::vector<Symbol>> restored(p.n);
  const auto stripe_array = [&](std::uint64_t s) {
    CodeArray arr(p);
    for (int col = 0; col < p.n; ++col) {
      if (columns[col].empty()) continue;
      for (int row = 0; row < p.k; ++row)
        arr.at(row, col) = columns[col][s * p.k + row];
    }
    return arr;
  };

  if (result.repaired.size() == 1 && p.is_data_col(result.repaired[0])) {
    const int j = result.repaired[0];
    for (std::uint64_t s = 0; s < stripes; ++s) {
      auto [col, report] = repair_data_node(codec, stripe_array(s), j);
      restored[j].insert(restored[j].end(), col.begin(), col.end());
      result.total_reads += report.reads.size();
      if (s == 0) result.per_stripe = std::move(report);
    }
    result.lambda = double(result.per_stripe.reads.size()) / p.k;
  } else if (result.repaired.size() == 1) {
    const int j = result.repaired[0];
    result.parity_reencode = true;
    for (std::uint64_t s = 0; s < stripes; ++s) {
      const auto col = repair_parity_node(codec, stripe_array(s), j);
      restored[j].insert(restored[j].end(), col.begin(), col.end());
      result.total_reads += std::size_t(p.k) * p.k;
    }
    result.lambda = double(p.k);  // reads the whole data block per stripe
  } else {
    result.generic_decode = true;
    for (std::uint64_t s = 0; s < stripes; ++s) {
      const CodeArray arr = stripe_array(s);
      const auto data = decode_erasures(codec, arr, result.repaired);
      if (!data) {
        std::string pat;
        for (int i : result.repaired) pat += (pat.empty() ? "" : ",") + std::to_string(i);
        throw Undecodable("erasure pattern {" + pat + "} is undecodable");
      }
      CodeArray full = arr;
      for (int row = 0; row < p.k; ++row)
        for (int col = 0; col < p.k; ++col)
          full.at(row, col) = (*data)[std::size_t(row) * p.k + col];
      for (int j : result.repaired) {
        std::vector<Symbol> col(p.k);
        if (p.is_data_col(j))
          for (int row = 0; row < p.k; ++row)
            col[row] = (*data)[std::size_t(row) * p.k + j];
        else
          col = repair_parity_node(codec, full, j);
        restored[j].insert(restored[j].end(), col.begin(), col.end());
      }
      // Generic decoding reads every surviving symbol.
      result.total_reads += std::uint64_t(p.n - result.repaired.size()) * p.k;
    }
    result.lambda = double(p.n - result.repaired.size());
  }

  for (int j : result.repaired) {
    write_file(store.node_file(j), stored_bytes(restored[j], w));
    if (fs::exists(store.failed_file(j))) fs::remove(store.failed_file(j));
  }
  return result;
}

std::vector<std::uint8_t> reassemble(const NodeStore& store) {
  const Manifest m = load_manifest(store.manifest_file());
  if (!m.ingest) throw ParamError("store manifest has no ingest record");
  const CodeParams& p = m.params;
  const unsigned w = p.field.width;
  std::vector<Symbol> symbols;
  symbols.reserve(m.ingest->stripe_count * std::size_t(p.k) * p.k);
  std::vector<std::vector<Symbol>> columns(p.k);
  for (int j = 0; j < p.k; ++j) {
    if (store.node_failed(j))
      throw IoError("data node " + std::to_string(j) + " is failed; repair first");
    columns[j] = file_symbols(store.node_file(j), w);
  }
  for (std::uint64_t s = 0; s < m.ingest->stripe_count; ++s)
    for (int j = 0; j < p.k; ++j)
      for (int r = 0; r < p.k; ++r) symbols.push_back(columns[j][s * p.k + r]);
  auto bytes = symbols_to_bytes(symbols, w);
  bytes.resize(m.ingest->original_length);
  return bytes;
}

}  // namespace abec
