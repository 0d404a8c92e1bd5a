#include "zknot/zigzag.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace zknot {

namespace {

constexpr int kSlotDart[kSlotsPerFace][2] = {{0, 1}, {1, 2}, {2, 0}, {1, 0}, {2, 1}, {0, 2}};

int slot_of(const Tri& tri, VertexIndex tail, VertexIndex head) {
  for (int s = 0; s < kSlotsPerFace; ++s) {
    if (tri[kSlotDart[s][0]] == tail && tri[kSlotDart[s][1]] == head) return s;
  }
  return -1;
}

VertexIndex third_vertex(const Tri& tri, VertexIndex u, VertexIndex v) {
  for (VertexIndex x : tri) {
    if (x != u && x != v) return x;
  }
  return tri[0];
}

// Least rotation of a cyclic sequence (two-pointer minimal representation).
std::size_t least_rotation(const std::vector<OrientedEdge>& s) {
  const std::size_t n = s.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const auto& a = s[(i + k) % n];
    const auto& b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (b < a) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

}  // namespace

// ---------------------------------------------------------------------------
// Positions

std::size_t position_count(const Triangulation& t) { return t.face_count() * kSlotsPerFace; }

PositionId position_id(const Triangulation& t, FaceIndex face, Dart dart) {
  int s = slot_of(t.tri(face), dart.tail, dart.head);
  if (s < 0) throw Error(ErrorCode::InvalidPosition, "dart is not an oriented edge of " + t.face(face).to_string());
  return face * kSlotsPerFace + static_cast<PositionId>(s);
}

Dart position_dart(const Triangulation& t, PositionId p) {
  const Tri& tri = t.tri(position_face(p));
  int s = static_cast<int>(p % kSlotsPerFace);
  return {tri[kSlotDart[s][0]], tri[kSlotDart[s][1]]};
}

PositionId step(const Triangulation& t, PositionId p) {
  const FaceIndex f = position_face(p);
  const Dart d = position_dart(t, p);
  const FaceIndex g = t.other_face(*t.find_edge(d.tail, d.head), f);
  const VertexIndex w = third_vertex(t.tri(g), d.tail, d.head);
  return g * kSlotsPerFace + static_cast<PositionId>(slot_of(t.tri(g), d.head, w));
}

PositionId step_inverse(const Triangulation& t, PositionId p) {
  const FaceIndex g = position_face(p);
  const Dart d = position_dart(t, p);
  const VertexIndex u = third_vertex(t.tri(g), d.tail, d.head);
  const FaceIndex f = t.other_face(*t.find_edge(u, d.tail), g);
  return f * kSlotsPerFace + static_cast<PositionId>(slot_of(t.tri(f), u, d.tail));
}

PositionId reverse_position(const Triangulation& t, PositionId p) {
  const FaceIndex f = position_face(p);
  const Dart d = position_dart(t, p);
  const VertexIndex x = third_vertex(t.tri(f), d.tail, d.head);
  return f * kSlotsPerFace + static_cast<PositionId>(slot_of(t.tri(f), d.tail, x));
}

PositionId to_position_id(const Triangulation& t, const ZigzagPosition& p) {
  if (!p.face.contains(p.dart)) {
    throw Error(ErrorCode::InvalidPosition, p.dart.to_string() + " is not in " + p.face.to_string());
  }
  auto f = t.find_face(p.face);
  if (!f) throw Error(ErrorCode::InvalidPosition, "face " + p.face.to_string() + " is not in the triangulation");
  Dart d{*t.find_vertex(p.dart.tail()), *t.find_vertex(p.dart.head())};
  return position_id(t, *f, d);
}

ZigzagPosition to_position(const Triangulation& t, PositionId p) {
  Dart d = position_dart(t, p);
  return {OrientedEdge(t.label(d.tail), t.label(d.head)), t.face(position_face(p))};
}

ZigzagPosition step(const Triangulation& t, const ZigzagPosition& p) {
  return to_position(t, step(t, to_position_id(t, p)));
}

ZigzagPosition reverse_position(const ZigzagPosition& p) {
  if (!p.face.contains(p.dart)) {
    throw Error(ErrorCode::InvalidPosition, p.dart.to_string() + " is not in " + p.face.to_string());
  }
  return {-face_rotation_inverse(p.face, p.dart), p.face};
}

// ---------------------------------------------------------------------------
// Zigzag values

Zigzag Zigzag::from_cycle(std::vector<OrientedEdge> darts) {
  Zigzag z;
  if (!darts.empty()) {
    std::rotate(darts.begin(), darts.begin() + static_cast<std::ptrdiff_t>(least_rotation(darts)), darts.end());
  }
  z.darts_ = std::move(darts);
  return z;
}

std::vector<VertexId> Zigzag::vertex_cycle() const {
  std::vector<VertexId> out;
  out.reserve(darts_.size());
  for (const auto& d : darts_) out.push_back(d.tail());
  return out;
}

std::vector<Edge> Zigzag::edges() const {
  std::vector<Edge> out;
  out.reserve(darts_.size());
  for (const auto& d : darts_) out.push_back(d.underlying());
  return out;
}

Zigzag Zigzag::reversed() const {
  std::vector<OrientedEdge> rev;
  rev.reserve(darts_.size());
  for (auto it = darts_.rbegin(); it != darts_.rend(); ++it) rev.push_back(-*it);
  return from_cycle(std::move(rev));
}

namespace {

Zigzag zigzag_of_orbit(const Triangulation& t, const std::vector<PositionId>& orbit) {
  std::vector<OrientedEdge> darts;
  darts.reserve(orbit.size());
  for (PositionId p : orbit) {
    Dart d = position_dart(t, p);
    darts.emplace_back(t.label(d.tail), t.label(d.head));
  }
  return Zigzag::from_cycle(std::move(darts));
}

std::vector<PositionId> orbit_from(const Triangulation& t, PositionId seed) {
  std::vector<PositionId> orbit{seed};
  for (PositionId p = step(t, seed); p != seed; p = step(t, p)) orbit.push_back(p);
  return orbit;
}

}  // namespace

Zigzag trace(const Triangulation& t, const ZigzagPosition& p) {
  return zigzag_of_orbit(t, orbit_from(t, to_position_id(t, p)));
}

// ---------------------------------------------------------------------------
// Atlas

OrbitPartition orbit_partition(const Triangulation& t) {
  const std::size_t n = position_count(t);
  std::vector<PositionId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::tuple<VertexIndex, VertexIndex, FaceIndex>> keys(n);
  for (PositionId p = 0; p < n; ++p) {
    Dart d = position_dart(t, p);
    keys[p] = {d.tail, d.head, position_face(p)};
  }
  std::sort(order.begin(), order.end(), [&](PositionId a, PositionId b) { return keys[a] < keys[b]; });

  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  OrbitPartition out;
  out.orbit_of.assign(n, kUnset);
  for (PositionId seed : order) {
    if (out.orbit_of[seed] != kUnset) continue;
    auto id = static_cast<std::uint32_t>(out.orbits.size());
    out.orbits.push_back(orbit_from(t, seed));
    for (PositionId p : out.orbits.back()) out.orbit_of[p] = id;
  }
  out.reverse.resize(out.orbits.size());
  for (std::size_t o = 0; o < out.orbits.size(); ++o) {
    out.reverse[o] = out.orbit_of[reverse_position(t, out.orbits[o].front())];
    if (out.reverse[o] == o) throw std::logic_error("zigzag coincides with its own reverse");
  }
  return out;
}

ZigzagAtlas all_zigzags(const Triangulation& t) {
  ZigzagAtlas atlas;
  atlas.orbits = orbit_partition(t);
  atlas.zigzags.reserve(atlas.orbits.orbits.size());
  for (const auto& orbit : atlas.orbits.orbits) atlas.zigzags.push_back(zigzag_of_orbit(t, orbit));
  atlas.reverse.assign(atlas.orbits.reverse.begin(), atlas.orbits.reverse.end());
  return atlas;
}

bool is_z_knotted(const Triangulation& t) {
  OrbitPartition partition = orbit_partition(t);
  if (partition.orbits.size() != 2) return false;
  // Each of the two zigzags must traverse every edge exactly twice.
  std::vector<int> visits(t.edge_count(), 0);
  for (PositionId p : partition.orbits.front()) {
    Dart d = position_dart(t, p);
    ++visits[*t.find_edge(d.tail, d.head)];
  }
  if (!std::all_of(visits.begin(), visits.end(), [](int v) { return v == 2; })) {
    throw std::logic_error("single zigzag pair does not cover every edge twice");
  }
  return true;
}

std::vector<Zigzag> zigzags_of_face(const Triangulation& t, const Face& f) {
  FaceIndex fi = t.require_face(f);
  std::vector<std::vector<PositionId>> orbits;
  std::vector<PositionId> seen;
  for (int s = 0; s < kSlotsPerFace; ++s) {
    PositionId p = fi * kSlotsPerFace + static_cast<PositionId>(s);
    if (std::find(seen.begin(), seen.end(), p) != seen.end()) continue;
    orbits.push_back(orbit_from(t, p));
    seen.insert(seen.end(), orbits.back().begin(), orbits.back().end());
  }
  std::vector<Zigzag> out;
  out.reserve(orbits.size());
  for (const auto& orbit : orbits) out.push_back(zigzag_of_orbit(t, orbit));
  return out;
}

bool is_locally_z_knotted(const Triangulation& t, const Face& f) { return zigzags_of_face(t, f).size() == 2; }

bool is_essential(const Triangulation& t, const Face& f) {
  FaceIndex fi = t.require_face(f);
  const Tri& tri = t.tri(fi);
  auto in_face = [&](VertexIndex v) { return v == tri[0] || v == tri[1] || v == tri[2]; };
  OrbitPartition partition = orbit_partition(t);
  return std::all_of(partition.orbits.begin(), partition.orbits.end(), [&](const auto& orbit) {
    return std::any_of(orbit.begin(), orbit.end(), [&](PositionId p) {
      Dart d = position_dart(t, p);
      return in_face(d.tail) && in_face(d.head);
    });
  });
}

bool is_simple(const Zigzag& z) {
  std::vector<VertexId> vertices = z.vertex_cycle();
  std::sort(vertices.begin(), vertices.end());
  return std::adjacent_find(vertices.begin(), vertices.end()) == vertices.end();
}

std::vector<Edge> gauss_code(const Triangulation& t) {
  if (!is_z_knotted(t)) throw Error(ErrorCode::NotZKnotted, "triangulation has more than one zigzag pair");
  ZigzagAtlas atlas = all_zigzags(t);
  const Zigzag& z = std::min(atlas.zigzags[0], atlas.zigzags[1]);
  return z.edges();
}

}  // namespace zknot
