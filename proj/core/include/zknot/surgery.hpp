#pragma once

// Connected sums of triangulations along a pair of faces.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zknot/core_map.hpp"
#include "zknot/monodromy.hpp"

namespace zknot {

// A vertex bijection between the boundaries of two faces. It induces a dart
// bijection that commutes with negation and conjugates D_F into D_F'.
class SpecialMap {
 public:
  // images[i] is the image of source.vertices()[i]. Throws InvalidSpecialMap.
  SpecialMap(Face source, Face target, std::array<VertexId, 3> images);
  static SpecialMap from_pairs(const Face& source, const Face& target,
                               const std::vector<std::pair<VertexId, VertexId>>& pairs);

  const Face& source() const noexcept { return source_; }
  const Face& target() const noexcept { return target_; }
  const std::array<VertexId, 3>& images() const noexcept { return images_; }
  const VertexId& operator()(const VertexId& v) const;
  const VertexId& preimage(const VertexId& v) const;
  OrientedEdge operator()(const OrientedEdge& e) const { return {(*this)((e.tail())), (*this)(e.head())}; }

  // Induced dart map as a table: source dart index -> target dart index.
  std::array<int, 6> dart_table() const;
  // g * m * g^-1, carried onto the target face.
  DartPermutation transport(const DartPermutation& m) const;
  std::string to_string() const;

  friend bool operator==(const SpecialMap&, const SpecialMap&) = default;

 private:
  Face source_;
  Face target_;
  std::array<VertexId, 3> images_;
};

// All six special maps, ordered lexicographically by image triple.
std::vector<SpecialMap> enumerate_special_maps(const Face& source, const Face& target);

struct SumResult {
  Triangulation triangulation;
  std::string prefix;                       // prepended to labels of the second summand
  std::map<VertexId, VertexId> relabeling;  // second-summand label -> label in the sum
  std::array<VertexId, 3> glued;            // the identified boundary vertices (source labels)
};

// Removes F from T and F' from T', relabels T' as prefix + label (F' vertices
// go to their preimages under g) and glues. With no step given, the smallest
// k >= 1 whose prefix "s<k>." avoids every label of T is used.
SumResult connected_sum(const Triangulation& t, const Face& f, const Triangulation& t2, const Face& f2,
                        const SpecialMap& g, std::optional<int> step = std::nullopt);

// g M_F g^-1 M_F' has cycle type (3,3).
bool gluing_condition(const Triangulation& t, const Face& f, const Triangulation& t2, const Face& f2,
                      const SpecialMap& g);

enum class GluingVerdict { All, Exists, None };

std::string_view to_string(GluingVerdict verdict);

// Which special maps make the sum of two z-knotted triangulations z-knotted,
// given the types of the glued faces. Both tags must be in M1..M4.
GluingVerdict th4_decide(MonodromyTag type, MonodromyTag other);

// Glue a tetrahedron onto a z-knotted triangulation along a face whose
// monodromy is the identity, matching the face's sorted vertices to 1, 2, 3.
SumResult refine_identity_face(const Triangulation& t, const Face& f);

}  // namespace zknot
