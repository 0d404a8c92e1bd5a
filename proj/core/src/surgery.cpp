#include "zknot/surgery.hpp"

#include <algorithm>

#include "zknot/zigzag.hpp"

namespace zknot {

namespace {

void require_map_for(const SpecialMap& g, const Face& f, const Face& f2) {
  if (g.source() != f || g.target() != f2) {
    throw Error(ErrorCode::InvalidSpecialMap,
                "map " + g.to_string() + " does not go from " + f.to_string() + " to " + f2.to_string());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// SpecialMap

SpecialMap::SpecialMap(Face source, Face target, std::array<VertexId, 3> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  auto sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != target_.vertices()) {
    throw Error(ErrorCode::InvalidSpecialMap, "images are not the vertices of " + target_.to_string());
  }
}

SpecialMap SpecialMap::from_pairs(const Face& source, const Face& target,
                                  const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  if (pairs.size() != 3) throw Error(ErrorCode::InvalidSpecialMap, "a special map needs exactly three pairs");
  std::array<VertexId, 3> images;
  for (std::size_t i = 0; i < 3; ++i) {
    const VertexId& v = source.vertices()[i];
    auto it = std::find_if(pairs.begin(), pairs.end(), [&](const auto& p) { return p.first == v; });
    if (it == pairs.end()) {
      throw Error(ErrorCode::InvalidSpecialMap, "no image given for vertex " + v.label());
    }
    images[i] = it->second;
  }
  for (const auto& [from, to] : pairs) {
    if (!source.contains(from)) {
      throw Error(ErrorCode::InvalidSpecialMap, from.label() + " is not a vertex of " + source.to_string());
    }
  }
  return SpecialMap(source, target, images);
}

const VertexId& SpecialMap::operator()(const VertexId& v) const {
  for (std::size_t i = 0; i < 3; ++i) {
    if (source_.vertices()[i] == v) return images_[i];
  }
  throw Error(ErrorCode::InvalidSpecialMap, v.label() + " is not a vertex of " + source_.to_string());
}

const VertexId& SpecialMap::preimage(const VertexId& v) const {
  for (std::size_t i = 0; i < 3; ++i) {
    if (images_[i] == v) return source_.vertices()[i];
  }
  throw Error(ErrorCode::InvalidSpecialMap, v.label() + " is not a vertex of " + target_.to_string());
}

std::array<int, 6> SpecialMap::dart_table() const {
  const FaceDartSet from(source_);
  const FaceDartSet to(target_);
  std::array<int, 6> table{};
  for (int i = 0; i < 6; ++i) table[static_cast<std::size_t>(i)] = to.index_of((*this)(from.dart(i)));
  return table;
}

DartPermutation SpecialMap::transport(const DartPermutation& m) const {
  if (!(m.set().face() == source_)) {
    throw Error(ErrorCode::InvalidSpecialMap, "permutation does not act on " + source_.to_string());
  }
  const auto g = dart_table();
  std::array<int, 6> g_inv{};
  for (int i = 0; i < 6; ++i) g_inv[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])] = i;
  DartPermutation::Table t{};
  for (std::size_t j = 0; j < 6; ++j) {
    t[j] = static_cast<std::uint8_t>(g[static_cast<std::size_t>(m(g_inv[j]))]);
  }
  return {FaceDartSet(target_), t};
}

std::string SpecialMap::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) out += ",";
    out += source_.vertices()[i].label() + ":" + images_[i].label();
  }
  return out;
}

std::vector<SpecialMap> enumerate_special_maps(const Face& source, const Face& target) {
  std::array<VertexId, 3> images = target.vertices();  // sorted, so permutations come out in order
  std::vector<SpecialMap> out;
  do {
    out.emplace_back(source, target, images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Connected sum

SumResult connected_sum(const Triangulation& t, const Face& f, const Triangulation& t2, const Face& f2,
                        const SpecialMap& g, std::optional<int> step) {
  t.require_face(f);
  t2.require_face(f2);
  require_map_for(g, f, f2);

  auto collides = [&](const std::string& prefix) {
    return std::any_of(t2.vertices().begin(), t2.vertices().end(), [&](const VertexId& v) {
      return !f2.contains(v) && t.find_vertex(VertexId(prefix + v.label())).has_value();
    });
  };
  std::string prefix;
  if (step) {
    prefix = "s" + std::to_string(*step) + ".";
    if (collides(prefix)) {
      throw Error(ErrorCode::LabelCollision, "prefix '" + prefix + "' collides with existing labels");
    }
  } else {
    for (int k = 1;; ++k) {
      prefix = "s" + std::to_string(k) + ".";
      if (!collides(prefix)) break;
    }
  }

  SumResult result{Triangulation{}, prefix, {}, f.vertices()};
  for (const VertexId& v : t2.vertices()) {
    result.relabeling.emplace(v, f2.contains(v) ? g.preimage(v) : VertexId(prefix + v.label()));
  }

  std::vector<VertexTriple> faces;
  faces.reserve(t.face_count() + t2.face_count() - 2);
  for (const Face& face : t.faces()) {
    if (face != f) faces.push_back(face.vertices());
  }
  for (const Face& face : t2.faces()) {
    if (face == f2) continue;
    const auto& v = face.vertices();
    faces.push_back({result.relabeling.at(v[0]), result.relabeling.at(v[1]), result.relabeling.at(v[2])});
  }
  try {
    result.triangulation = build_triangulation(faces);
  } catch (const Error& e) {
    throw Error(ErrorCode::ValidationFailure, std::string("connected sum is not a triangulation: ") + e.what());
  }
  return result;
}

bool gluing_condition(const Triangulation& t, const Face& f, const Triangulation& t2, const Face& f2,
                      const SpecialMap& g) {
  require_map_for(g, f, f2);
  const DartPermutation m = z_monodromy(t, f);
  const DartPermutation m2 = z_monodromy(t2, f2);
  return is_two_disjoint_3cycles(g.transport(m) * m2);
}

// ---------------------------------------------------------------------------
// Sums of z-knotted triangulations

std::string_view to_string(GluingVerdict verdict) {
  switch (verdict) {
    case GluingVerdict::All: return "ALL";
    case GluingVerdict::Exists: return "EXISTS";
    case GluingVerdict::None: return "NONE";
  }
  return "?";
}

GluingVerdict th4_decide(MonodromyTag type, MonodromyTag other) {
  if (!is_knotted_type(type) || !is_knotted_type(other)) {
    throw Error(ErrorCode::InvalidType, "faces of z-knotted triangulations have types M1..M4");
  }
  using enum MonodromyTag;
  if (type == M2 || other == M2) return GluingVerdict::All;
  if (type == M1 || other == M1) {
    MonodromyTag partner = type == M1 ? other : type;
    return partner == M3 ? GluingVerdict::All : GluingVerdict::None;
  }
  return GluingVerdict::Exists;
}

SumResult refine_identity_face(const Triangulation& t, const Face& f) {
  if (!z_monodromy(t, f).is_identity()) {
    throw Error(ErrorCode::MonodromyNotIdentity, "monodromy of " + f.to_string() + " is not the identity");
  }
  if (!is_z_knotted(t)) throw Error(ErrorCode::NotZKnotted, "refinement needs a z-knotted triangulation");
  const Triangulation tetrahedron = build_triangulation({{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"},
                                                         {"2", "3", "4"}});
  const Face f2("1", "2", "3");
  const SpecialMap g(f, f2, {VertexId("1"), VertexId("2"), VertexId("3")});
  return connected_sum(t, f, tetrahedron, f2, g);
}

}  // namespace zknot
