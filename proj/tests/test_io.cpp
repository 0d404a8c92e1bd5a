#include <gtest/gtest.h>

#include <filesystem>

#include <nlohmann/json.hpp>

#include "corpus.hpp"
#include "zknot/generators.hpp"
#include "zknot/io.hpp"
#include "zknot/shredding.hpp"

using namespace zknot;

namespace {

Error error_of(std::string_view text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "parse accepted " << text;
  return Error(ErrorCode::SyntaxError, "");
}

}  // namespace

TEST(Parse, TetrahedronRoundTrip) {
  Triangulation tet = platonic(Platonic::Tetrahedron);
  EXPECT_EQ(parse(serialize(tet)), tet);
}

TEST(Parse, CorpusRoundTrip) {
  for (const auto& [name, t] : corpus::full(30)) {
    SCOPED_TRACE(name);
    const std::string text = serialize(t);
    EXPECT_EQ(parse(text), t);
    EXPECT_EQ(serialize(parse(text)), text);
  }
}

TEST(Parse, MissingFacesIsSyntaxError) {
  EXPECT_EQ(error_of(R"({"format": "tri-json/1"})").code(), ErrorCode::SyntaxError);
  EXPECT_EQ(error_of("not json").code(), ErrorCode::SyntaxError);
  EXPECT_EQ(error_of(R"({"format": "tri-json/2", "faces": []})").code(), ErrorCode::SyntaxError);
  EXPECT_EQ(error_of(R"({"faces": [["1", "2", 3.5]]})").code(), ErrorCode::SyntaxError);
  EXPECT_EQ(error_of("[1, 2]").code(), ErrorCode::SyntaxError);
}

TEST(Parse, EdgeDegreeViolationNamesTheEdge) {
  Error e = error_of(R"({"faces": [["1","2","3"], ["1","2","4"], ["1","2","5"], ["1","3","4"], ["2","3","4"]]})");
  EXPECT_EQ(e.code(), ErrorCode::ValidationFailure);
  const std::string message = e.what();
  EXPECT_NE(message.find("EdgeDegreeViolation"), std::string::npos) << message;
  EXPECT_NE(message.find("1"), std::string::npos);
  EXPECT_NE(message.find("2"), std::string::npos);
}

TEST(Parse, NonTriangleFace) {
  EXPECT_EQ(error_of(R"({"faces": [["1","2","3","4"]]})").code(), ErrorCode::ValidationFailure);
}

TEST(Parse, IntegerLabelsBecomeText) {
  Triangulation t = parse(R"({"faces": [[1,2,3], [1,2,4], [1,3,4], [2,3,4]]})");
  EXPECT_EQ(t, platonic(Platonic::Tetrahedron));
  EXPECT_TRUE(t.find_vertex(VertexId("4")).has_value());
}

TEST(Parse, VertexListMustMatchFaces) {
  const char* faces = R"("faces": [["1","2","3"], ["1","2","4"], ["1","3","4"], ["2","3","4"]])";
  EXPECT_NO_THROW(parse(std::string(R"({"vertices": ["1","2","3","4"], )") + faces + "}"));
  EXPECT_EQ(error_of(std::string(R"({"vertices": ["1","2","3","4","5"], )") + faces + "}").code(),
            ErrorCode::ValidationFailure);
  EXPECT_EQ(error_of(std::string(R"({"vertices": ["1","2","3"], )") + faces + "}").code(),
            ErrorCode::ValidationFailure);
}

TEST(Serialize, CanonicalAndSorted) {
  // Same surface, faces and triples listed in a different order.
  Triangulation a = parse(R"({"faces": [["4","3","2"], ["3","1","4"], ["2","1","4"], ["3","2","1"]]})");
  Triangulation b = platonic(Platonic::Tetrahedron);
  EXPECT_EQ(serialize(a), serialize(b));
  const auto doc = nlohmann::json::parse(serialize(a));
  EXPECT_EQ(doc["format"], "tri-json/1");
  std::vector<std::vector<std::string>> faces = doc["faces"];
  EXPECT_TRUE(std::is_sorted(faces.begin(), faces.end()));
  for (const auto& f : faces) EXPECT_TRUE(std::is_sorted(f.begin(), f.end()));
}

TEST(Serialize, Bipyramid3HasSixFaces) {
  const auto doc = nlohmann::json::parse(serialize(bipyramid(3)));
  EXPECT_EQ(doc["faces"].size(), 6u);
  EXPECT_EQ(doc["vertices"].size(), 5u);
}

TEST(Serialize, MetadataRoundTrip) {
  Metadata meta;
  meta.name = "BP_7";
  meta.family = "bipyramid";
  meta.parameters["n"] = 7;
  TriangulationDocument doc = parse_document(serialize(bipyramid(7), meta));
  EXPECT_EQ(doc.triangulation, bipyramid(7));
  EXPECT_EQ(doc.metadata.name, "BP_7");
  EXPECT_EQ(doc.metadata.family, "bipyramid");
  EXPECT_EQ(doc.metadata.parameters.at("n"), 7);
}

TEST(Certificate, RoundTrip) {
  for (const Triangulation& t : {bipyramid(8), platonic(Platonic::Octahedron), projective_plane_fig5()}) {
    ShredResult r = shred(t);
    const std::string text = serialize_certificate(r.certificate);
    ShredCertificate back = parse_certificate(text);
    EXPECT_EQ(back, r.certificate);
    EXPECT_EQ(serialize_certificate(back), text);
    EXPECT_TRUE(verify_certificate(t, back, r.output).ok);
  }
}

TEST(Certificate, MalformedIsSyntaxError) {
  for (const char* text : {"{}", R"({"format": "zknot-cert/1"})", R"({"format": "x", "steps": [], "final_zigzag_length": 0})",
                           R"({"format": "zknot-cert/1", "steps": [{}], "final_zigzag_length": 0})"}) {
    try {
      parse_certificate(text);
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::SyntaxError) << text;
    }
  }
}

TEST(Files, WriteThenRead) {
  const auto path = std::filesystem::temp_directory_path() / "zknot_io_test.json";
  write_file(path.string(), serialize(bipyramid(4)));
  EXPECT_EQ(parse(read_file(path.string())), bipyramid(4));
  std::filesystem::remove(path);
  EXPECT_THROW(read_file(path.string()), Error);
}
