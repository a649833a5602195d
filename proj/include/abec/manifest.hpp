#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "abec/codec.hpp"

namespace abec {

inline constexpr int kManifestFormatVersion = 1;

struct IngestInfo {
  std::uint64_t original_length = 0;  // bytes, before padding
  std::uint64_t stripe_count = 0;
  bool operator==(const IngestInfo&) const = default;
};

// Self-contained description of a code instance: repair needs only this plus
// the surviving node files. Serialized as versioned JSON with hex-encoded
// coefficients; round-trips byte-identically.
struct Manifest {
  int format_version = kManifestFormatVersion;
  CodeParams params;
  Matrix alpha;
  std::vector<ParityEquation> class_a;
  ClassBPlan class_b;
  std::optional<IngestInfo> ingest;

  static Manifest from_codec(const Codec& codec);
  Codec to_codec() const;
};

std::string manifest_to_json(const Manifest& m);
Manifest manifest_from_json(const std::string& text);

void save_manifest(const Manifest& m, const std::filesystem::path& path);
Manifest load_manifest(const std::filesystem::path& path);

}  // namespace abec
