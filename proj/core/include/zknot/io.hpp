#pragma once

// tri-json/1 documents and shredding certificates.
//
//   {"format": "tri-json/1",
//    "vertices": ["1", "2", ...],            optional on input
//    "faces": [["1","2","3"], ...],          sorted triples, sorted list
//    "metadata": {"name": ..., "family": ..., "parameters": {...}}}   optional
//
// Labels may be given as strings or integers; integers become their decimal
// text. Serialization is canonical: equal triangulations give equal bytes.

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "zknot/core_map.hpp"
#include "zknot/shredding.hpp"

namespace zknot {

inline constexpr std::string_view kTriJsonFormat = "tri-json/1";
inline constexpr std::string_view kCertificateFormat = "zknot-cert/1";

struct Metadata {
  std::optional<std::string> name;
  std::optional<std::string> family;
  std::map<std::string, long long> parameters;
};

struct TriangulationDocument {
  Triangulation triangulation;
  Metadata metadata;
};

// Throws SyntaxError for malformed documents and ValidationFailure (message
// names the failing rule and face/edge) when the faces are not a triangulation.
TriangulationDocument parse_document(std::string_view text);
Triangulation parse(std::string_view text);

// Raw face list of a document, without validation.
std::vector<VertexTriple> parse_face_list(std::string_view text);

std::string serialize(const Triangulation& t, const Metadata& metadata = {});

std::string serialize_certificate(const ShredCertificate& certificate);
ShredCertificate parse_certificate(std::string_view text);  // throws SyntaxError

std::string read_file(const std::string& path);  // throws SyntaxError if unreadable
void write_file(const std::string& path, std::string_view contents);

}  // namespace zknot
