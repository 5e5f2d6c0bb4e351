#include "ooc/json_io.hpp"

#include <fstream>
#include <sstream>

namespace ooc {

namespace {

constexpr int kFormatVersion = 1;

Json parse_text(const std::string& text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw DocumentError("document is not valid JSON");
  return doc;
}

void require_version(const Json& doc) {
  if (!doc.is_object() || !doc.contains("version") || !doc["version"].is_number_integer())
    throw DocumentError("document is missing an integer 'version'");
  if (doc["version"].get<int>() != kFormatVersion)
    throw DocumentError("unrecognized document version");
}

int read_modulus(const Json& doc) {
  if (!doc.contains("v") || !doc["v"].is_number_integer())
    throw DocumentError("document is missing an integer 'v'");
  return doc["v"].get<int>();
}

std::vector<Codeword> read_codeword_lists(const Json& doc, const char* key, int v) {
  if (!doc.contains(key) || !doc[key].is_array() || doc[key].empty())
    throw DocumentError(std::string("document needs a nonempty array '") + key + "'");
  std::vector<Codeword> words;
  for (const auto& entry : doc[key]) {
    if (!entry.is_array()) throw DocumentError("codewords must be arrays of residues");
    std::vector<int> support;
    for (const auto& r : entry) {
      if (!r.is_number_integer()) throw DocumentError("residues must be integers");
      support.push_back(r.get<int>());
    }
    try {
      words.emplace_back(v, std::move(support));
    } catch (const std::invalid_argument& e) {
      throw DocumentError(std::string("bad codeword: ") + e.what());
    }
  }
  return words;
}

Json supports_json(const std::vector<Codeword>& words) {
  Json arr = Json::array();
  for (const auto& c : words) arr.push_back(c.support());
  return arr;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Json family_to_json(const OocFamily& f, Json meta) {
  Json doc;
  doc["version"] = kFormatVersion;
  doc["v"] = f.modulus();
  doc["codewords"] = supports_json(f.codewords());
  doc["meta"] = meta.is_null() ? Json::object() : std::move(meta);
  return doc;
}

FamilyDocument parse_family_document(const std::string& text) {
  Json doc = parse_text(text);
  require_version(doc);
  const int v = read_modulus(doc);
  std::vector<Codeword> words = read_codeword_lists(doc, "codewords", v);
  try {
    OocFamily family(std::move(words));
    Json meta = doc.contains("meta") ? doc["meta"] : Json::object();
    return {std::move(family), std::move(meta)};
  } catch (const std::invalid_argument& e) {
    throw DocumentError(std::string("bad family: ") + e.what());
  }
}

FamilyDocument load_family_document(const std::string& path) {
  return parse_family_document(slurp(path));
}

Json packing_to_json(const CyclicPacking& p) {
  Json doc;
  doc["version"] = kFormatVersion;
  doc["type"] = "packing";
  doc["v"] = p.v;
  doc["w"] = p.w;
  doc["t"] = p.t;
  doc["lambda"] = p.lambda;
  Json orbits = Json::array();
  for (const auto& orbit : p.orbits) {
    Json o;
    o["base"] = orbit.base.support();
    o["length"] = orbit.orbit_length;
    o["full"] = orbit.full;
    orbits.push_back(std::move(o));
  }
  doc["orbits"] = std::move(orbits);
  doc["blocks"] = supports_json(p.blocks);
  return doc;
}

CyclicPacking parse_packing_document(const std::string& text) {
  Json doc = parse_text(text);
  require_version(doc);
  if (!doc.contains("type") || doc["type"] != "packing")
    throw DocumentError("expected a packing document");
  CyclicPacking p;
  p.v = read_modulus(doc);
  for (const char* key : {"w", "t", "lambda"})
    if (!doc.contains(key) || !doc[key].is_number_integer())
      throw DocumentError(std::string("packing document is missing integer '") + key + "'");
  p.w = doc["w"].get<int>();
  p.t = doc["t"].get<int>();
  p.lambda = doc["lambda"].get<int>();
  p.blocks = read_codeword_lists(doc, "blocks", p.v);
  if (doc.contains("orbits")) {
    for (const auto& o : doc["orbits"]) {
      if (!o.is_object() || !o.contains("base"))
        throw DocumentError("malformed orbit entry");
      std::vector<int> support;
      for (const auto& r : o["base"]) support.push_back(r.get<int>());
      PackingOrbit orbit{Codeword(p.v, std::move(support)),
                         o.value("length", 0), o.value("full", false)};
      p.orbits.push_back(std::move(orbit));
    }
  }
  return p;
}

CyclicPacking load_packing_document(const std::string& path) {
  return parse_packing_document(slurp(path));
}

Json cwcpc_to_json(const ConstantWeightCode& c) {
  Json doc;
  doc["version"] = kFormatVersion;
  doc["type"] = "cwcpc";
  doc["v"] = c.v;
  doc["w"] = c.w;
  doc["codewords"] = supports_json(c.codewords);
  doc["d_hamming"] = c.d_hamming ? Json(*c.d_hamming) : Json(nullptr);
  doc["d_cyclic"] = c.d_cyclic ? Json(*c.d_cyclic) : Json(nullptr);
  doc["degenerate"] = c.degenerate;
  return doc;
}

ConstantWeightCode parse_cwcpc_document(const std::string& text) {
  Json doc = parse_text(text);
  require_version(doc);
  if (!doc.contains("type") || doc["type"] != "cwcpc")
    throw DocumentError("expected a cwcpc document");
  ConstantWeightCode c;
  c.v = read_modulus(doc);
  c.codewords = read_codeword_lists(doc, "codewords", c.v);
  c.w = c.codewords.front().weight();
  for (const auto& word : c.codewords)
    if (word.weight() != c.w) throw DocumentError("cwcpc codewords must share one weight");
  if (doc.contains("d_hamming") && doc["d_hamming"].is_number_integer())
    c.d_hamming = doc["d_hamming"].get<int>();
  if (doc.contains("d_cyclic") && doc["d_cyclic"].is_number_integer())
    c.d_cyclic = doc["d_cyclic"].get<int>();
  c.degenerate = doc.value("degenerate", false);
  return c;
}

ConstantWeightCode load_cwcpc_document(const std::string& path) {
  return parse_cwcpc_document(slurp(path));
}

}  // namespace ooc
