#include "abec/manifest.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace abec {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string hex(std::uint32_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << std::uppercase << v;
  return os.str();
}

std::uint32_t from_hex(const std::string& s) {
  return std::uint32_t(std::stoul(s, nullptr, 0));
}

ordered_json equation_to_json(const ParityEquation& eq) {
  ordered_json terms = ordered_json::array();
  for (const Term& t : eq.terms)
    terms.push_back({t.pos.row, t.pos.col, hex(t.coeff), t.scaled});
  return ordered_json{{"target", {eq.target.row, eq.target.col}},
                      {"terms", std::move(terms)}};
}

ParityEquation equation_from_json(const json& j) {
  ParityEquation eq;
  eq.target = {j.at("target").at(0).get<int>(), j.at("target").at(1).get<int>()};
  for (const auto& t : j.at("terms"))
    eq.terms.push_back({{t.at(0).get<int>(), t.at(1).get<int>()},
                        Symbol(from_hex(t.at(2).get<std::string>())),
                        t.at(3).get<bool>()});
  return eq;
}

}  // namespace

Manifest Manifest::from_codec(const Codec& codec) {
  Manifest m;
  m.params = codec.params;
  m.alpha = codec.alpha;
  m.class_a = codec.class_a;
  m.class_b = codec.class_b;
  return m;
}

Codec Manifest::to_codec() const {
  Codec c{params, Field(params.field), alpha, class_a, class_b};
  if (const std::string err = validate(params); !err.empty())
    throw ParamError(err);
  return c;
}

std::string manifest_to_json(const Manifest& m) {
  ordered_json j;
  j["format_version"] = m.format_version;
  j["params"] = {{"n", m.params.n},
                 {"k", m.params.k},
                 {"n_a", m.params.n_a},
                 {"n_b", m.params.n_b()},
                 {"tau", m.params.tau},
                 {"field_width", m.params.field.width},
                 {"field_modulus", hex(m.params.field.modulus)}};
  ordered_json alpha = ordered_json::array();
  for (int l = 0; l < m.alpha.rows; ++l) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < m.alpha.cols; ++c) row.push_back(hex(m.alpha.at(l, c)));
    alpha.push_back(std::move(row));
  }
  j["mds_coefficients"] = std::move(alpha);

  ordered_json class_a = ordered_json::array();
  for (const ParityEquation& eq : m.class_a) class_a.push_back(equation_to_json(eq));
  j["class_a_equations"] = std::move(class_a);

  ordered_json class_b = ordered_json::array();
  for (const auto& node : m.class_b.nodes) {
    ordered_json eqs = ordered_json::array();
    for (const ParityEquation& eq : node) eqs.push_back(equation_to_json(eq));
    class_b.push_back(std::move(eqs));
  }
  j["class_b_nodes"] = std::move(class_b);

  // Derived, emitted for diagnostics and human diffing.
  ordered_json designated = ordered_json::array();
  ordered_json costs = ordered_json::array();
  for (int r = 0; r < m.params.k; ++r) {
    ordered_json cost_row = ordered_json::array();
    for (int c = 0; c < m.params.k; ++c) {
      const int v = m.class_b.final_costs.k == m.params.k
                        ? m.class_b.final_costs.at(r, c)
                        : ReadCostMatrix::kInfinite;
      if (v == ReadCostMatrix::kInfinite)
        cost_row.push_back("inf");
      else
        cost_row.push_back(v);
      if (in_Q({r, c}, m.params)) {
        if (auto pos = find_designated({r, c}, m.params, m.class_b))
          designated.push_back(
              {{"symbol", {r, c}}, {"parity", {pos->row, pos->col}}});
      }
    }
    costs.push_back(std::move(cost_row));
  }
  j["designated_parities"] = std::move(designated);
  j["read_costs"] = std::move(costs);

  if (m.ingest)
    j["ingest"] = {{"original_length", m.ingest->original_length},
                   {"stripe_count", m.ingest->stripe_count}};

  return j.dump(2) + "\n";
}

Manifest manifest_from_json(const std::string& text) {
  const json j = json::parse(text);
  Manifest m;
  m.format_version = j.at("format_version").get<int>();
  if (m.format_version != kManifestFormatVersion)
    throw ParamError("unsupported manifest format version");
  const auto& p = j.at("params");
  m.params.n = p.at("n").get<int>();
  m.params.k = p.at("k").get<int>();
  m.params.n_a = p.at("n_a").get<int>();
  m.params.tau = p.at("tau").get<int>();
  m.params.field.width = p.at("field_width").get<unsigned>();
  m.params.field.modulus = from_hex(p.at("field_modulus").get<std::string>());

  const auto& alpha = j.at("mds_coefficients");
  m.alpha = Matrix(int(alpha.size()), alpha.empty() ? 0 : int(alpha.at(0).size()));
  for (int l = 0; l < m.alpha.rows; ++l)
    for (int c = 0; c < m.alpha.cols; ++c)
      m.alpha.at(l, c) = Symbol(from_hex(alpha.at(l).at(c).get<std::string>()));

  for (const auto& eq : j.at("class_a_equations"))
    m.class_a.push_back(equation_from_json(eq));
  for (const auto& node : j.at("class_b_nodes")) {
    std::vector<ParityEquation> eqs;
    for (const auto& eq : node) eqs.push_back(equation_from_json(eq));
    m.class_b.nodes.push_back(std::move(eqs));
  }
  m.class_b.final_costs = plan_read_costs(m.params, m.class_b);

  if (j.contains("ingest"))
    m.ingest = IngestInfo{j.at("ingest").at("original_length").get<std::uint64_t>(),
                          j.at("ingest").at("stripe_count").get<std::uint64_t>()};
  return m;
}

void save_manifest(const Manifest& m, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write manifest: " + path.string());
  out << manifest_to_json(m);
}

Manifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read manifest: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return manifest_from_json(ss.str());
}

}  // namespace abec
