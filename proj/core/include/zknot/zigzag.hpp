#pragma once

// Zigzags (closed left-right paths) of a triangulation.
//
// A zigzag is driven by a permutation on *positions*. A position is a dart
// together with a face containing it; it stands for the pair of consecutive
// zigzag edges (D_F^-1(dart), dart), both lying in that face. Stepping moves
// across the dart into the other face and turns at the dart's head, which is
// exactly the rule that consecutive pairs must alternate faces. There are
// six positions per face (4E in total), numbered face * 6 + slot.

#include <cstdint>
#include <vector>

#include "zknot/core_map.hpp"

namespace zknot {

struct ZigzagPosition {
  OrientedEdge dart;
  Face face;

  friend bool operator==(const ZigzagPosition&, const ZigzagPosition&) = default;
};

using PositionId = std::uint32_t;

struct Dart {
  VertexIndex tail;
  VertexIndex head;

  friend bool operator==(const Dart&, const Dart&) = default;
};

// Slot order inside a face with sorted vertices (a, b, c):
//   0: ab  1: bc  2: ca  3: ba  4: cb  5: ac
// so slots 0..2 form the D_F cycle of ab and slot s+3 is the negation of s.
inline constexpr int kSlotsPerFace = 6;

std::size_t position_count(const Triangulation& t);
PositionId position_id(const Triangulation& t, FaceIndex face, Dart dart);
Dart position_dart(const Triangulation& t, PositionId p);
inline FaceIndex position_face(PositionId p) { return p / kSlotsPerFace; }
PositionId step(const Triangulation& t, PositionId p);
PositionId step_inverse(const Triangulation& t, PositionId p);
PositionId reverse_position(const Triangulation& t, PositionId p);

PositionId to_position_id(const Triangulation& t, const ZigzagPosition& p);  // throws InvalidPosition
ZigzagPosition to_position(const Triangulation& t, PositionId p);

ZigzagPosition step(const Triangulation& t, const ZigzagPosition& p);
// (dart d, face F) -> (-D_F^-1(d), F); needs no triangulation.
ZigzagPosition reverse_position(const ZigzagPosition& p);

// A directed zigzag as a cyclic dart sequence, stored in its least rotation.
class Zigzag {
 public:
  static Zigzag from_cycle(std::vector<OrientedEdge> darts);

  const std::vector<OrientedEdge>& darts() const noexcept { return darts_; }
  std::size_t length() const noexcept { return darts_.size(); }
  std::vector<VertexId> vertex_cycle() const;
  std::vector<Edge> edges() const;  // with multiplicity, in traversal order
  Zigzag reversed() const;

  friend auto operator<=>(const Zigzag&, const Zigzag&) = default;
  friend bool operator==(const Zigzag&, const Zigzag&) = default;

 private:
  std::vector<OrientedEdge> darts_;
};

Zigzag trace(const Triangulation& t, const ZigzagPosition& p);

// Orbit partition of all positions. Orbits are discovered by scanning
// positions in (tail, head, face) order.
struct OrbitPartition {
  std::vector<std::uint32_t> orbit_of;             // indexed by PositionId
  std::vector<std::vector<PositionId>> orbits;     // each starts at its seed
  std::vector<std::uint32_t> reverse;              // orbit -> reversed orbit
};

OrbitPartition orbit_partition(const Triangulation& t);

struct ZigzagAtlas {
  std::vector<Zigzag> zigzags;       // canonical directed zigzags, discovery order
  std::vector<std::size_t> reverse;  // fixed-point-free pairing
  OrbitPartition orbits;

  std::size_t size() const noexcept { return zigzags.size(); }
};

ZigzagAtlas all_zigzags(const Triangulation& t);

bool is_z_knotted(const Triangulation& t);
std::vector<Zigzag> zigzags_of_face(const Triangulation& t, const Face& f);
bool is_locally_z_knotted(const Triangulation& t, const Face& f);
bool is_essential(const Triangulation& t, const Face& f);
bool is_simple(const Zigzag& z);

// Underlying edges along the single zigzag (smaller directed form of the
// pair). Throws NotZKnotted.
std::vector<Edge> gauss_code(const Triangulation& t);

}  // namespace zknot
