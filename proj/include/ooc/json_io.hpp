#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ooc/conversions.hpp"
#include "ooc/family.hpp"

namespace ooc {

// Raised for unreadable, unparsable, or schema-violating documents.
class DocumentError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

// Family interchange document:
//   {"version":1,"v":INT,"codewords":[[INT,...],...],"meta":{...}}
// Codewords are always sorted residue lists, never bitstrings.
struct FamilyDocument {
  OocFamily family;
  Json meta;
};

Json family_to_json(const OocFamily& f, Json meta = Json::object());
FamilyDocument parse_family_document(const std::string& text);
FamilyDocument load_family_document(const std::string& path);

Json packing_to_json(const CyclicPacking& p);
CyclicPacking parse_packing_document(const std::string& text);
CyclicPacking load_packing_document(const std::string& path);

Json cwcpc_to_json(const ConstantWeightCode& c);
ConstantWeightCode parse_cwcpc_document(const std::string& text);
ConstantWeightCode load_cwcpc_document(const std::string& path);

}  // namespace ooc
