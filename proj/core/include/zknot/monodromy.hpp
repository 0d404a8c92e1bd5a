#pragma once

// z-monodromy of a face and its classification into the seven types M1..M7.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zknot/core_map.hpp"

namespace zknot {

// The six darts of a face. With sorted vertices (a, b, c) the order is
// ab, bc, ca, ba, cb, ac: the D_F cycle of ab followed by the negations,
// so index i + 3 (mod 6) is the negation of index i.
class FaceDartSet {
 public:
  explicit FaceDartSet(const Face& face);

  const Face& face() const noexcept { return face_; }
  const std::array<OrientedEdge, 6>& darts() const noexcept { return darts_; }
  const OrientedEdge& dart(int i) const { return darts_[static_cast<std::size_t>(i)]; }
  int index_of(const OrientedEdge& e) const;  // throws EdgeNotInFace
  static constexpr int negate(int i) { return (i + 3) % 6; }

  friend bool operator==(const FaceDartSet& a, const FaceDartSet& b) { return a.face_ == b.face_; }

 private:
  Face face_;
  std::array<OrientedEdge, 6> darts_;
};

class DartPermutation {
 public:
  using Table = std::array<std::uint8_t, 6>;

  DartPermutation(FaceDartSet set, Table table);  // throws InvalidType if not a bijection
  static DartPermutation identity(const FaceDartSet& set);
  static DartPermutation face_rotation(const Face& face);  // D_F

  const FaceDartSet& set() const noexcept { return set_; }
  const Table& table() const noexcept { return table_; }
  int operator()(int i) const { return table_[static_cast<std::size_t>(i)]; }
  OrientedEdge operator()(const OrientedEdge& e) const { return set_.dart((*this)(set_.index_of(e))); }

  DartPermutation inverse() const;
  bool is_identity() const;
  // Cycle lengths, sorted descending (fixed points included as 1).
  std::vector<int> cycle_type() const;
  std::string to_string() const;  // cycle notation

  // (a * b)(e) = a(b(e)).
  friend DartPermutation operator*(const DartPermutation& a, const DartPermutation& b);
  friend bool operator==(const DartPermutation& a, const DartPermutation& b) {
    return a.set_ == b.set_ && a.table_ == b.table_;
  }

 private:
  FaceDartSet set_;
  Table table_;
};

DartPermutation z_monodromy(const Triangulation& t, const Face& f);
DartPermutation z_monodromy(const Triangulation& t, FaceIndex f);

enum class MonodromyTag { M1 = 1, M2, M3, M4, M5, M6, M7 };

std::string_view to_string(MonodromyTag tag);
MonodromyTag parse_monodromy_tag(std::string_view text);  // throws InvalidType
// M1..M4 are exactly the locally z-knotted types.
inline bool is_knotted_type(MonodromyTag tag) { return static_cast<int>(tag) <= 4; }

struct MonodromyType {
  MonodromyTag tag;
  // (e1, e2, e3): a cycle of D_F (of D_F^-1 for M6). Absent for M1, M2, M5.
  std::optional<std::array<OrientedEdge, 3>> witness;
};

// Rebuild the permutation a classification stands for.
DartPermutation expand(const MonodromyType& type, const FaceDartSet& set);

// Throws UnclassifiableMonodromy when m matches none of the seven shapes.
MonodromyType classify(const DartPermutation& m, const DartPermutation& d);

bool is_two_disjoint_3cycles(const DartPermutation& p);
bool locally_z_knotted_via_monodromy(const Triangulation& t, const Face& f);

struct FaceMonodromy {
  Face face;
  DartPermutation monodromy;
  MonodromyType type;
};

// Every face in canonical face order.
std::vector<FaceMonodromy> monodromy_table(const Triangulation& t);
std::vector<MonodromyTag> face_types(const Triangulation& t);  // indexed by FaceIndex

}  // namespace zknot
