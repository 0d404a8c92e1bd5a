#pragma once

// Combinatorial triangulations of closed surfaces.
//
// A triangulation is stored as its set of faces (vertex triples). Everything
// else (edges, edge->face incidence, vertex order) is derived once at
// construction. Vertices are text labels ordered lexicographically, and the
// internal vertex indices follow that order, so sorting by index and sorting
// by label agree everywhere.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "zknot/error.hpp"

namespace zknot {

class VertexId {
 public:
  VertexId() = default;
  explicit VertexId(std::string label) : label_(std::move(label)) {}
  explicit VertexId(std::string_view label) : label_(label) {}
  explicit VertexId(const char* label) : label_(label) {}

  // Integer labels are canonicalized to their decimal text.
  static VertexId from_int(long long value) { return VertexId(std::to_string(value)); }

  const std::string& label() const noexcept { return label_; }

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
  friend bool operator==(const VertexId&, const VertexId&) = default;

 private:
  std::string label_;
};

// Unordered pair of distinct vertices, smaller label first.
class Edge {
 public:
  Edge(VertexId u, VertexId v);

  const VertexId& lo() const noexcept { return lo_; }
  const VertexId& hi() const noexcept { return hi_; }
  std::string to_string() const;

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;

 private:
  VertexId lo_;
  VertexId hi_;
};

class OrientedEdge {
 public:
  OrientedEdge(VertexId tail, VertexId head);

  const VertexId& tail() const noexcept { return tail_; }
  const VertexId& head() const noexcept { return head_; }
  OrientedEdge operator-() const { return OrientedEdge(head_, tail_); }
  Edge underlying() const { return Edge(tail_, head_); }
  std::string to_string() const;

  friend auto operator<=>(const OrientedEdge&, const OrientedEdge&) = default;
  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;

 private:
  VertexId tail_;
  VertexId head_;
};

// Triangle with its three distinct vertices stored in sorted order.
class Face {
 public:
  Face(VertexId a, VertexId b, VertexId c);
  Face(std::string_view a, std::string_view b, std::string_view c)
      : Face(VertexId(a), VertexId(b), VertexId(c)) {}

  const std::array<VertexId, 3>& vertices() const noexcept { return vertices_; }
  bool contains(const VertexId& v) const;
  bool contains(const Edge& e) const { return contains(e.lo()) && contains(e.hi()); }
  bool contains(const OrientedEdge& e) const { return contains(e.tail()) && contains(e.head()); }
  std::array<Edge, 3> edges() const;
  // The vertex of this face not on e. Throws EdgeNotInFace.
  const VertexId& opposite(const Edge& e) const;
  std::string to_string() const;

  friend auto operator<=>(const Face&, const Face&) = default;
  friend bool operator==(const Face&, const Face&) = default;

 private:
  std::array<VertexId, 3> vertices_;
};

// D_F: for distinct vertices x, y, z of F, maps xy to yz.
OrientedEdge face_rotation(const Face& face, const OrientedEdge& e);
OrientedEdge face_rotation_inverse(const Face& face, const OrientedEdge& e);

using VertexTriple = std::array<VertexId, 3>;

using VertexIndex = std::uint32_t;
using EdgeIndex = std::uint32_t;
using FaceIndex = std::uint32_t;
using Tri = std::array<VertexIndex, 3>;  // sorted ascending

struct Violation {
  ErrorCode rule;
  std::string subject;  // offending face or edge, as text
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

class Triangulation {
 public:
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t face_count() const noexcept { return tris_.size(); }

  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  std::vector<Face> faces() const;
  std::vector<Edge> edges() const;

  bool has_face(const Face& f) const { return find_face(f).has_value(); }
  // The unique face other than f containing e. Throws EdgeNotInFace.
  Face other_face(const Edge& e, const Face& f) const;

  // Index-level access used by the zigzag and monodromy engines.
  const VertexId& label(VertexIndex v) const { return vertices_[v]; }
  std::optional<VertexIndex> find_vertex(const VertexId& v) const;
  const Tri& tri(FaceIndex f) const { return tris_[f]; }
  const std::vector<Tri>& tris() const noexcept { return tris_; }
  std::optional<FaceIndex> find_face(const Tri& t) const;
  std::optional<FaceIndex> find_face(const Face& f) const;
  FaceIndex require_face(const Face& f) const;  // throws FaceNotFound
  Face face(FaceIndex f) const;
  std::optional<EdgeIndex> find_edge(VertexIndex u, VertexIndex v) const;
  const std::array<VertexIndex, 2>& edge_ends(EdgeIndex e) const { return edges_[e]; }
  const std::array<FaceIndex, 2>& edge_faces(EdgeIndex e) const { return edge_faces_[e]; }
  FaceIndex other_face(EdgeIndex e, FaceIndex f) const {
    const auto& fs = edge_faces_[e];
    return fs[0] == f ? fs[1] : fs[0];
  }

  friend bool operator==(const Triangulation& a, const Triangulation& b) {
    return a.vertices_ == b.vertices_ && a.tris_ == b.tris_;
  }

 private:
  friend Triangulation build_triangulation(std::span<const VertexTriple> face_list);

  std::vector<VertexId> vertices_;
  std::vector<Tri> tris_;
  std::vector<std::array<VertexIndex, 2>> edges_;
  std::vector<std::array<FaceIndex, 2>> edge_faces_;
  std::unordered_map<std::uint64_t, EdgeIndex> edge_lookup_;
};

// Validates then builds; throws Error carrying the first violation's rule.
Triangulation build_triangulation(std::span<const VertexTriple> face_list);
Triangulation build_triangulation(const std::vector<std::array<std::string, 3>>& face_list);

ValidationReport validate(std::span<const VertexTriple> face_list);
ValidationReport validate(const Triangulation& t);

long euler_characteristic(const Triangulation& t);
bool is_orientable(const Triangulation& t);

}  // namespace zknot
