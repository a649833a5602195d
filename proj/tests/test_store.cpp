#include <doctest.h>

#include <filesystem>
#include <random>

#include "abec/manifest.hpp"
#include "abec/store.hpp"

using namespace abec;
namespace fs = std::filesystem;

namespace {

const CodeParams kTen = CodeParams::make(10, 5, 7, 1);

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag)
      : path(fs::current_path() / ("tmp_" + tag)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::vector<std::uint8_t> random_bytes(std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::uint8_t> out(count);
  for (auto& b : out) b = std::uint8_t(rng());
  return out;
}

}  // namespace

TEST_CASE("symbol packing round-trips for every supported width") {
  for (unsigned w : {1u, 2u, 4u, 8u, 16u}) {
    const auto bytes = random_bytes(64, 50 + w);
    const auto symbols = bytes_to_symbols(bytes, w);
    for (Symbol s : symbols) CHECK(s < (1u << w));
    auto back = symbols_to_bytes(symbols, w);
    back.resize(bytes.size());
    CHECK(back == bytes);
  }
  CHECK(stored_symbol_bytes(4) == 1);
  CHECK(stored_symbol_bytes(16) == 2);
  CHECK_THROWS_AS(stored_symbol_bytes(3), ParamError);
  CHECK_THROWS_AS(stored_symbol_bytes(12), ParamError);
  CHECK_THROWS_AS(bytes_to_symbols({1, 2}, 5), ParamError);
}

TEST_CASE("ingest, fail, repair, reassemble round trip") {
  TempDir tmp("roundtrip");
  const auto payload = random_bytes(3001, 51);  // several stripes plus a tail
  write_file(tmp.path / "input.bin", payload);

  const Codec codec = Codec::build(kTen);
  const Manifest m = ingest(tmp.path / "input.bin", codec, tmp.path / "store");
  REQUIRE(m.ingest.has_value());
  CHECK(m.ingest->original_length == payload.size());
  CHECK(m.ingest->stripe_count == (payload.size() + 24) / 25);

  NodeStore store{tmp.path / "store"};
  for (int i = 0; i < 10; ++i) CHECK(fs::exists(store.node_file(i)));
  CHECK(reassemble(store) == payload);

  fail_node(store, 2);
  CHECK(store.node_failed(2));
  CHECK_THROWS_AS(fail_node(store, 2), AlreadyFailed);
  CHECK_THROWS_AS(reassemble(store), IoError);

  const StoreRepairResult r = repair_store(store);
  CHECK(r.repaired == std::vector<int>{2});
  CHECK(r.stripes == m.ingest->stripe_count);
  CHECK(r.per_stripe.reads.size() == 9);
  CHECK(r.lambda == doctest::Approx(1.8));
  CHECK(r.total_reads == 9 * r.stripes);
  CHECK(!store.node_failed(2));
  CHECK(reassemble(store) == payload);
}

TEST_CASE("tiny and empty payloads pad to one stripe") {
  for (std::size_t len : {std::size_t(0), std::size_t(25)}) {
    TempDir tmp("small" + std::to_string(len));
    const auto payload = random_bytes(len, 52);
    write_file(tmp.path / "in", payload);
    const Manifest m =
        ingest(tmp.path / "in", Codec::build(kTen), tmp.path / "store");
    CHECK(m.ingest->stripe_count == 1);
    NodeStore store{tmp.path / "store"};
    fail_node(store, 0);
    repair_store(store);
    CHECK(reassemble(store) == payload);
  }
}

TEST_CASE("parity node failures are re-encoded") {
  TempDir tmp("parity");
  write_file(tmp.path / "in", random_bytes(200, 53));
  ingest(tmp.path / "in", Codec::build(kTen), tmp.path / "store");
  NodeStore store{tmp.path / "store"};
  const auto before = read_file(store.node_file(7));
  fail_node(store, 7);
  const StoreRepairResult r = repair_store(store);
  CHECK(r.parity_reencode);
  CHECK(r.lambda == doctest::Approx(5.0));
  CHECK(read_file(store.node_file(7)) == before);
}

TEST_CASE("multiple failures go through generic decoding") {
  TempDir tmp("multi");
  const auto payload = random_bytes(500, 54);
  write_file(tmp.path / "in", payload);
  ingest(tmp.path / "in", Codec::build(kTen), tmp.path / "store");
  NodeStore store{tmp.path / "store"};
  fail_node(store, 1);
  fail_node(store, 6);
  const StoreRepairResult r = repair_store(store);
  CHECK(r.generic_decode);
  CHECK(r.repaired == std::vector<int>{1, 6});
  CHECK(reassemble(store) == payload);
}

TEST_CASE("round trips hold across widths and parameters") {
  int run = 0;
  for (unsigned w : {4u, 8u, 16u})
    for (const CodeParams base :
         {CodeParams::make(10, 5, 7, 1), CodeParams::make(9, 6, 8, 1)}) {
      CodeParams p = base;
      p.field = FieldSpec::make(w);
      TempDir tmp("sweep" + std::to_string(run));
      const auto payload = random_bytes(137 + 11 * run, 55 + run);
      write_file(tmp.path / "in", payload);
      ingest(tmp.path / "in", Codec::build(p), tmp.path / "store");
      NodeStore store{tmp.path / "store"};
      fail_node(store, run % p.n);
      repair_store(store);
      CHECK(reassemble(store) == payload);
      ++run;
    }
}

TEST_CASE("manifest json round-trips byte-identically") {
  const Codec codec = Codec::build(kTen);
  Manifest m = Manifest::from_codec(codec);
  m.ingest = IngestInfo{12345, 494};
  const std::string text = manifest_to_json(m);
  const Manifest back = manifest_from_json(text);
  CHECK(manifest_to_json(back) == text);
  CHECK(back.format_version == kManifestFormatVersion);
  CHECK(back.ingest == m.ingest);
  const Codec rebuilt = back.to_codec();
  CHECK(rebuilt.alpha == codec.alpha);
  REQUIRE(rebuilt.class_a.size() == codec.class_a.size());
  for (std::size_t i = 0; i < codec.class_a.size(); ++i) {
    CHECK(rebuilt.class_a[i].target == codec.class_a[i].target);
    REQUIRE(rebuilt.class_a[i].terms.size() == codec.class_a[i].terms.size());
  }
  CHECK(rebuilt.class_b.final_costs == codec.class_b.final_costs);
}

TEST_CASE("generated manifest matches the checked-in golden file") {
  const fs::path golden = fs::path(ABEC_SOURCE_DIR) / "data" /
                          "manifest_10_5.json";
  REQUIRE(fs::exists(golden));
  const auto bytes = read_file(golden);
  const std::string text(bytes.begin(), bytes.end());
  CHECK(manifest_to_json(Manifest::from_codec(Codec::build(kTen))) == text);
}
