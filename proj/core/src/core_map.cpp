#include "zknot/core_map.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace zknot {

namespace {

std::uint64_t edge_key(VertexIndex u, VertexIndex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

std::string triple_text(const VertexTriple& t) {
  return "{" + t[0].label() + "," + t[1].label() + "," + t[2].label() + "}";
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Value types

Edge::Edge(VertexId u, VertexId v) : lo_(std::move(u)), hi_(std::move(v)) {
  if (lo_ == hi_) throw Error(ErrorCode::InvalidEdge, "edge endpoints coincide: " + lo_.label());
  if (hi_ < lo_) std::swap(lo_, hi_);
}

std::string Edge::to_string() const { return lo_.label() + "-" + hi_.label(); }

OrientedEdge::OrientedEdge(VertexId tail, VertexId head)
    : tail_(std::move(tail)), head_(std::move(head)) {
  if (tail_ == head_) throw Error(ErrorCode::InvalidEdge, "dart endpoints coincide: " + tail_.label());
}

std::string OrientedEdge::to_string() const { return tail_.label() + "->" + head_.label(); }

Face::Face(VertexId a, VertexId b, VertexId c) : vertices_{std::move(a), std::move(b), std::move(c)} {
  std::sort(vertices_.begin(), vertices_.end());
  if (vertices_[0] == vertices_[1] || vertices_[1] == vertices_[2]) {
    throw Error(ErrorCode::NonTriangleInput, "face needs three distinct vertices: " + to_string());
  }
}

bool Face::contains(const VertexId& v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

std::array<Edge, 3> Face::edges() const {
  return {Edge(vertices_[0], vertices_[1]), Edge(vertices_[0], vertices_[2]),
          Edge(vertices_[1], vertices_[2])};
}

const VertexId& Face::opposite(const Edge& e) const {
  if (!contains(e)) throw Error(ErrorCode::EdgeNotInFace, e.to_string() + " not in " + to_string());
  for (const auto& v : vertices_) {
    if (v != e.lo() && v != e.hi()) return v;
  }
  throw Error(ErrorCode::EdgeNotInFace, e.to_string() + " not in " + to_string());
}

std::string Face::to_string() const {
  return "{" + vertices_[0].label() + "," + vertices_[1].label() + "," + vertices_[2].label() + "}";
}

OrientedEdge face_rotation(const Face& face, const OrientedEdge& e) {
  if (!face.contains(e)) {
    throw Error(ErrorCode::EdgeNotInFace, e.to_string() + " not in " + face.to_string());
  }
  return OrientedEdge(e.head(), face.opposite(e.underlying()));
}

OrientedEdge face_rotation_inverse(const Face& face, const OrientedEdge& e) {
  if (!face.contains(e)) {
    throw Error(ErrorCode::EdgeNotInFace, e.to_string() + " not in " + face.to_string());
  }
  return OrientedEdge(face.opposite(e.underlying()), e.tail());
}

// ---------------------------------------------------------------------------
// Validation

ValidationReport validate(std::span<const VertexTriple> face_list) {
  ValidationReport report;
  auto add = [&](ErrorCode rule, std::string subject, std::string message) {
    report.violations.push_back({rule, std::move(subject), std::move(message)});
  };

  if (face_list.empty()) {
    add(ErrorCode::EmptyInput, "", "face list is empty");
    return report;
  }

  std::vector<VertexTriple> sorted;
  sorted.reserve(face_list.size());
  for (std::size_t i = 0; i < face_list.size(); ++i) {
    VertexTriple t = face_list[i];
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) {
      add(ErrorCode::NonTriangleInput, triple_text(face_list[i]),
          "face #" + std::to_string(i) + " does not have three distinct vertices");
      continue;
    }
    sorted.push_back(std::move(t));
  }
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) {
      add(ErrorCode::DuplicateFace, triple_text(sorted[i]), "face listed more than once (E2)");
    }
  }
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty()) return report;

  // Edge degrees over the distinct faces.
  std::map<std::pair<VertexId, VertexId>, std::vector<std::size_t>> edge_faces;
  for (std::size_t f = 0; f < sorted.size(); ++f) {
    const auto& t = sorted[f];
    edge_faces[{t[0], t[1]}].push_back(f);
    edge_faces[{t[0], t[2]}].push_back(f);
    edge_faces[{t[1], t[2]}].push_back(f);
  }
  std::set<VertexId> bad_vertices;
  for (const auto& [edge, faces] : edge_faces) {
    if (faces.size() != 2) {
      add(ErrorCode::EdgeDegreeViolation, edge.first.label() + "-" + edge.second.label(),
          "edge lies in " + std::to_string(faces.size()) + " faces, expected 2 (E1)");
      bad_vertices.insert(edge.first);
      bad_vertices.insert(edge.second);
    }
  }

  // Each vertex link must be a single cycle, otherwise the faces do not form
  // a surface near that vertex. Skipped where E1 already failed.
  std::map<VertexId, std::vector<std::pair<VertexId, VertexId>>> links;
  for (const auto& t : sorted) {
    links[t[0]].push_back({t[1], t[2]});
    links[t[1]].push_back({t[0], t[2]});
    links[t[2]].push_back({t[0], t[1]});
  }
  for (const auto& [v, link] : links) {
    if (bad_vertices.count(v)) continue;
    std::map<VertexId, std::vector<VertexId>> adj;
    for (const auto& [x, y] : link) {
      adj[x].push_back(y);
      adj[y].push_back(x);
    }
    std::set<VertexId> seen;
    std::vector<VertexId> stack{adj.begin()->first};
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      if (!seen.insert(x).second) continue;
      for (const auto& y : adj[x]) stack.push_back(y);
    }
    if (seen.size() != adj.size()) {
      add(ErrorCode::NonManifoldVertex, v.label(), "vertex link is not a single cycle");
    }
  }

  // Face adjacency must be connected.
  DisjointSets sets(sorted.size());
  for (const auto& [edge, faces] : edge_faces) {
    for (std::size_t i = 1; i < faces.size(); ++i) sets.unite(faces[0], faces[i]);
  }
  std::size_t root = sets.find(0);
  for (std::size_t f = 1; f < sorted.size(); ++f) {
    if (sets.find(f) != root) {
      add(ErrorCode::Disconnected, triple_text(sorted[f]),
          "face is not reachable from " + triple_text(sorted[0]) + " through shared edges");
      break;
    }
  }
  return report;
}

ValidationReport validate(const Triangulation& t) {
  std::vector<VertexTriple> triples;
  triples.reserve(t.face_count());
  for (const auto& f : t.faces()) triples.push_back(f.vertices());
  return validate(triples);
}

// ---------------------------------------------------------------------------
// Construction

Triangulation build_triangulation(std::span<const VertexTriple> face_list) {
  ValidationReport report = validate(face_list);
  if (!report.ok()) {
    const Violation& first = report.violations.front();
    std::string message = first.message;
    if (!first.subject.empty()) message = first.subject + ": " + message;
    throw Error(first.rule, message);
  }

  Triangulation t;
  std::set<VertexId> labels;
  for (const auto& triple : face_list) labels.insert(triple.begin(), triple.end());
  t.vertices_.assign(labels.begin(), labels.end());

  auto index_of = [&](const VertexId& v) {
    return static_cast<VertexIndex>(
        std::lower_bound(t.vertices_.begin(), t.vertices_.end(), v) - t.vertices_.begin());
  };
  t.tris_.reserve(face_list.size());
  for (const auto& triple : face_list) {
    Tri tri{index_of(triple[0]), index_of(triple[1]), index_of(triple[2])};
    std::sort(tri.begin(), tri.end());
    t.tris_.push_back(tri);
  }
  std::sort(t.tris_.begin(), t.tris_.end());

  std::vector<std::pair<std::uint64_t, FaceIndex>> incidences;
  incidences.reserve(3 * t.tris_.size());
  for (FaceIndex f = 0; f < t.tris_.size(); ++f) {
    const Tri& tri = t.tris_[f];
    incidences.push_back({edge_key(tri[0], tri[1]), f});
    incidences.push_back({edge_key(tri[0], tri[2]), f});
    incidences.push_back({edge_key(tri[1], tri[2]), f});
  }
  std::sort(incidences.begin(), incidences.end());
  for (std::size_t i = 0; i < incidences.size(); i += 2) {
    std::uint64_t key = incidences[i].first;
    auto e = static_cast<EdgeIndex>(t.edges_.size());
    t.edges_.push_back({static_cast<VertexIndex>(key >> 32), static_cast<VertexIndex>(key & 0xffffffffu)});
    t.edge_faces_.push_back({incidences[i].second, incidences[i + 1].second});
    t.edge_lookup_.emplace(key, e);
  }
  return t;
}

Triangulation build_triangulation(const std::vector<std::array<std::string, 3>>& face_list) {
  std::vector<VertexTriple> triples;
  triples.reserve(face_list.size());
  for (const auto& f : face_list) triples.push_back({VertexId(f[0]), VertexId(f[1]), VertexId(f[2])});
  return build_triangulation(triples);
}

// ---------------------------------------------------------------------------
// Queries

std::vector<Face> Triangulation::faces() const {
  std::vector<Face> out;
  out.reserve(tris_.size());
  for (FaceIndex f = 0; f < tris_.size(); ++f) out.push_back(face(f));
  return out;
}

std::vector<Edge> Triangulation::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& [u, v] : edges_) out.emplace_back(vertices_[u], vertices_[v]);
  return out;
}

Face Triangulation::face(FaceIndex f) const {
  const Tri& t = tris_[f];
  return Face(vertices_[t[0]], vertices_[t[1]], vertices_[t[2]]);
}

std::optional<VertexIndex> Triangulation::find_vertex(const VertexId& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<VertexIndex>(it - vertices_.begin());
}

std::optional<FaceIndex> Triangulation::find_face(const Tri& t) const {
  auto it = std::lower_bound(tris_.begin(), tris_.end(), t);
  if (it == tris_.end() || *it != t) return std::nullopt;
  return static_cast<FaceIndex>(it - tris_.begin());
}

std::optional<FaceIndex> Triangulation::find_face(const Face& f) const {
  Tri t{};
  for (int i = 0; i < 3; ++i) {
    auto v = find_vertex(f.vertices()[i]);
    if (!v) return std::nullopt;
    t[i] = *v;
  }
  return find_face(t);  // labels sorted => indices sorted
}

FaceIndex Triangulation::require_face(const Face& f) const {
  auto idx = find_face(f);
  if (!idx) throw Error(ErrorCode::FaceNotFound, "face " + f.to_string() + " is not in the triangulation");
  return *idx;
}

std::optional<EdgeIndex> Triangulation::find_edge(VertexIndex u, VertexIndex v) const {
  auto it = edge_lookup_.find(edge_key(u, v));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

Face Triangulation::other_face(const Edge& e, const Face& f) const {
  if (!f.contains(e)) throw Error(ErrorCode::EdgeNotInFace, e.to_string() + " not in " + f.to_string());
  FaceIndex fi = require_face(f);
  auto u = find_vertex(e.lo());
  auto v = find_vertex(e.hi());
  auto ei = find_edge(*u, *v);
  return face(other_face(*ei, fi));
}

long euler_characteristic(const Triangulation& t) {
  return static_cast<long>(t.vertex_count()) - static_cast<long>(t.edge_count()) +
         static_cast<long>(t.face_count());
}

bool is_orientable(const Triangulation& t) {
  // orientation[f] = +1 keeps the sorted cyclic order (v0,v1,v2), -1 reverses it.
  auto direction = [&](FaceIndex f, VertexIndex u, VertexIndex v) {
    const Tri& tri = t.tri(f);
    for (int i = 0; i < 3; ++i) {
      if (tri[i] == u) return tri[(i + 1) % 3] == v ? 1 : -1;
    }
    return 0;
  };
  std::vector<int> orientation(t.face_count(), 0);
  for (FaceIndex start = 0; start < t.face_count(); ++start) {
    if (orientation[start] != 0) continue;
    orientation[start] = 1;
    std::queue<FaceIndex> queue;
    queue.push(start);
    while (!queue.empty()) {
      FaceIndex f = queue.front();
      queue.pop();
      const Tri& tri = t.tri(f);
      for (int i = 0; i < 3; ++i) {
        VertexIndex u = tri[i];
        VertexIndex v = tri[(i + 1) % 3];
        FaceIndex g = t.other_face(*t.find_edge(u, v), f);
        int wanted = -orientation[f] * direction(f, u, v) * direction(g, u, v);
        if (orientation[g] == 0) {
          orientation[g] = wanted;
          queue.push(g);
        } else if (orientation[g] != wanted) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace zknot
