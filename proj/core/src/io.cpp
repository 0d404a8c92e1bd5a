#include "zknot/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace zknot {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void syntax_error(const std::string& message) { throw Error(ErrorCode::SyntaxError, message); }

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    syntax_error(std::string("malformed JSON: ") + e.what());
  }
}

VertexId label_of(const json& value, const std::string& where) {
  if (value.is_string()) return VertexId(value.get<std::string>());
  if (value.is_number_integer()) return VertexId::from_int(value.get<long long>());
  syntax_error(where + ": vertex labels must be strings or integers");
}

std::string quoted(const std::string& s) { return json(s).dump(); }

ordered_json face_json(const Face& f) {
  return ordered_json::array({f.vertices()[0].label(), f.vertices()[1].label(), f.vertices()[2].label()});
}

Face face_from_json(const json& value, const std::string& where) {
  if (!value.is_array() || value.size() != 3) syntax_error(where + ": a face is an array of three labels");
  try {
    return Face(label_of(value[0], where), label_of(value[1], where), label_of(value[2], where));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SyntaxError) throw;
    syntax_error(where + ": " + e.what());
  }
}

const json& require_field(const json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) syntax_error(where + ": missing \"" + key + "\"");
  return *it;
}

}  // namespace

// ---------------------------------------------------------------------------
// Triangulation documents

std::vector<VertexTriple> parse_face_list(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) syntax_error("document must be a JSON object");
  if (auto it = doc.find("format"); it != doc.end() && *it != std::string(kTriJsonFormat)) {
    syntax_error("unsupported format " + it->dump() + ", expected \"" + std::string(kTriJsonFormat) + "\"");
  }
  const json& faces = require_field(doc, "faces", "document");
  if (!faces.is_array()) syntax_error("\"faces\" must be an array");
  std::vector<VertexTriple> out;
  out.reserve(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const std::string where = "faces[" + std::to_string(i) + "]";
    const json& face = faces[i];
    if (!face.is_array()) syntax_error(where + ": a face is an array of labels");
    if (face.size() != 3) {
      throw Error(ErrorCode::ValidationFailure,
                  "NonTriangleInput at " + where + ": face has " + std::to_string(face.size()) + " vertices");
    }
    out.push_back({label_of(face[0], where), label_of(face[1], where), label_of(face[2], where)});
  }
  return out;
}

TriangulationDocument parse_document(std::string_view text) {
  const std::vector<VertexTriple> faces = parse_face_list(text);
  const json doc = json::parse(text);

  ValidationReport report = validate(faces);
  if (!report.ok()) {
    const Violation& v = report.violations.front();
    throw Error(ErrorCode::ValidationFailure,
                std::string(to_string(v.rule)) + (v.subject.empty() ? "" : " at " + v.subject) + ": " + v.message);
  }
  TriangulationDocument out{build_triangulation(faces), {}};

  if (auto it = doc.find("vertices"); it != doc.end()) {
    if (!it->is_array()) syntax_error("\"vertices\" must be an array");
    std::set<VertexId> listed;
    for (std::size_t i = 0; i < it->size(); ++i) {
      listed.insert(label_of((*it)[i], "vertices[" + std::to_string(i) + "]"));
    }
    for (const VertexId& v : listed) {
      if (!out.triangulation.find_vertex(v)) {
        throw Error(ErrorCode::ValidationFailure, "Disconnected at " + v.label() + ": vertex lies on no face");
      }
    }
    for (const VertexId& v : out.triangulation.vertices()) {
      if (!listed.count(v)) {
        throw Error(ErrorCode::ValidationFailure, "vertex " + v.label() + " is used by a face but not listed");
      }
    }
  }

  if (auto it = doc.find("metadata"); it != doc.end()) {
    if (!it->is_object()) syntax_error("\"metadata\" must be an object");
    if (auto name = it->find("name"); name != it->end() && name->is_string()) {
      out.metadata.name = name->get<std::string>();
    }
    if (auto family = it->find("family"); family != it->end() && family->is_string()) {
      out.metadata.family = family->get<std::string>();
    }
    if (auto params = it->find("parameters"); params != it->end() && params->is_object()) {
      for (const auto& [key, value] : params->items()) {
        if (!value.is_number_integer()) syntax_error("metadata parameter '" + key + "' must be an integer");
        out.metadata.parameters[key] = value.get<long long>();
      }
    }
  }
  return out;
}

Triangulation parse(std::string_view text) { return parse_document(text).triangulation; }

std::string serialize(const Triangulation& t, const Metadata& metadata) {
  std::ostringstream out;
  out << "{\n  \"format\": " << quoted(std::string(kTriJsonFormat)) << ",\n  \"vertices\": [";
  for (std::size_t i = 0; i < t.vertex_count(); ++i) {
    out << (i ? ", " : "") << quoted(t.label(static_cast<VertexIndex>(i)).label());
  }
  out << "],\n  \"faces\": [\n";
  for (FaceIndex f = 0; f < t.face_count(); ++f) {
    const Tri& tri = t.tri(f);
    out << "    [" << quoted(t.label(tri[0]).label()) << ", " << quoted(t.label(tri[1]).label()) << ", "
        << quoted(t.label(tri[2]).label()) << "]" << (f + 1 < t.face_count() ? "," : "") << "\n";
  }
  out << "  ]";
  if (metadata.name || metadata.family || !metadata.parameters.empty()) {
    ordered_json meta = ordered_json::object();
    if (metadata.name) meta["name"] = *metadata.name;
    if (metadata.family) meta["family"] = *metadata.family;
    if (!metadata.parameters.empty()) {
      ordered_json params = ordered_json::object();
      for (const auto& [key, value] : metadata.parameters) params[key] = value;
      meta["parameters"] = params;
    }
    out << ",\n  \"metadata\": " << meta.dump();
  }
  out << "\n}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Certificates

std::string serialize_certificate(const ShredCertificate& certificate) {
  ordered_json steps = ordered_json::array();
  for (const ShredStep& step : certificate.steps) {
    ordered_json pairs = ordered_json::array();
    for (std::size_t i = 0; i < 3; ++i) {
      pairs.push_back({step.map.source().vertices()[i].label(), step.map.images()[i].label()});
    }
    ordered_json relabeling = ordered_json::array();
    for (const auto& [from, to] : step.relabeling) relabeling.push_back({from.label(), to.label()});
    ordered_json entry;
    entry["bad_face"] = face_json(step.bad_face);
    entry["bad_type"] = std::string(to_string(step.bad_type));
    entry["patch"] = std::string(to_string(step.patch));
    entry["patch_face"] = face_json(step.map.target());
    entry["map"] = pairs;
    entry["prefix"] = step.prefix;
    entry["relabeling"] = relabeling;
    steps.push_back(entry);
  }
  ordered_json doc;
  doc["format"] = std::string(kCertificateFormat);
  doc["steps"] = steps;
  doc["final_zigzag_length"] = certificate.final_zigzag_length;
  return doc.dump(2) + "\n";
}

ShredCertificate parse_certificate(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) syntax_error("certificate must be a JSON object");
  if (require_field(doc, "format", "certificate") != std::string(kCertificateFormat)) {
    syntax_error("unsupported certificate format");
  }
  ShredCertificate out;
  const json& length = require_field(doc, "final_zigzag_length", "certificate");
  if (!length.is_number_unsigned()) syntax_error("final_zigzag_length must be a non-negative integer");
  out.final_zigzag_length = length.get<std::size_t>();
  const json& steps = require_field(doc, "steps", "certificate");
  if (!steps.is_array()) syntax_error("\"steps\" must be an array");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string where = "steps[" + std::to_string(i) + "]";
    const json& s = steps[i];
    if (!s.is_object()) syntax_error(where + ": a step is an object");
    try {
      Face bad_face = face_from_json(require_field(s, "bad_face", where), where + ".bad_face");
      Face patch_face = face_from_json(require_field(s, "patch_face", where), where + ".patch_face");
      const json& map = require_field(s, "map", where);
      const json& relabeling = require_field(s, "relabeling", where);
      if (!map.is_array() || !relabeling.is_array()) syntax_error(where + ": map and relabeling are arrays");
      std::vector<std::pair<VertexId, VertexId>> pairs;
      for (const json& p : map) {
        if (!p.is_array() || p.size() != 2) syntax_error(where + ".map: entries are [from, to] pairs");
        pairs.emplace_back(label_of(p[0], where), label_of(p[1], where));
      }
      std::map<VertexId, VertexId> relabel;
      for (const json& p : relabeling) {
        if (!p.is_array() || p.size() != 2) syntax_error(where + ".relabeling: entries are [from, to] pairs");
        relabel.emplace(label_of(p[0], where), label_of(p[1], where));
      }
      const json& prefix = require_field(s, "prefix", where);
      const json& bad_type = require_field(s, "bad_type", where);
      const json& patch = require_field(s, "patch", where);
      if (!prefix.is_string() || !bad_type.is_string() || !patch.is_string()) {
        syntax_error(where + ": prefix, bad_type and patch are strings");
      }
      out.steps.push_back(ShredStep{bad_face, parse_monodromy_tag(bad_type.get<std::string>()),
                                    parse_patch_id(patch.get<std::string>()),
                                    SpecialMap::from_pairs(bad_face, patch_face, pairs), prefix.get<std::string>(),
                                    std::move(relabel)});
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SyntaxError) throw;
      syntax_error(where + ": " + e.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Files

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) syntax_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::SyntaxError, "cannot write " + path);
  out << contents;
}

}  // namespace zknot
