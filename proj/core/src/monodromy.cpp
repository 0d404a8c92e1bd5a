#include "zknot/monodromy.hpp"

#include <algorithm>

#include "zknot/zigzag.hpp"

namespace zknot {

namespace {

using Cycle = std::array<int, 3>;

// "ab" for one-character labels, "tail>head" otherwise.
std::string dart_text(const OrientedEdge& e) {
  const std::string& t = e.tail().label();
  const std::string& h = e.head().label();
  return t.size() == 1 && h.size() == 1 ? t + h : t + ">" + h;
}

// The 3-cycles of a permutation, each listed from its smallest element.
std::vector<Cycle> three_cycles(const DartPermutation& p) {
  std::vector<Cycle> out;
  std::array<bool, 6> seen{};
  for (int i = 0; i < 6; ++i) {
    if (seen[i]) continue;
    int j = p(i), k = p(j);
    if (j != i && k != i && p(k) == i) out.push_back({i, j, k});
    for (int x = i; !seen[x]; x = p(x)) seen[x] = true;
  }
  return out;
}

std::vector<Cycle> rotations(const std::vector<Cycle>& cycles) {
  std::vector<Cycle> out;
  for (const Cycle& c : cycles) {
    out.push_back({c[0], c[1], c[2]});
    out.push_back({c[1], c[2], c[0]});
    out.push_back({c[2], c[0], c[1]});
  }
  return out;
}

constexpr int neg(int i) { return FaceDartSet::negate(i); }

// (-e1, e2, e3)(-e3, -e2, e1): shape of M3 and M6.
DartPermutation::Table three_cycle_shape(const Cycle& c) {
  DartPermutation::Table t{};
  auto set = [&](int from, int to) { t[static_cast<std::size_t>(from)] = static_cast<std::uint8_t>(to); };
  set(neg(c[0]), c[1]);
  set(c[1], c[2]);
  set(c[2], neg(c[0]));
  set(neg(c[2]), neg(c[1]));
  set(neg(c[1]), c[0]);
  set(c[0], neg(c[2]));
  return t;
}

// (e1, -e2)(e2, -e1), e3 and -e3 fixed: shape of M4.
DartPermutation::Table crossed_transpositions(const Cycle& c) {
  DartPermutation::Table t{};
  auto set = [&](int from, int to) { t[static_cast<std::size_t>(from)] = static_cast<std::uint8_t>(to); };
  set(c[0], neg(c[1]));
  set(neg(c[1]), c[0]);
  set(c[1], neg(c[0]));
  set(neg(c[0]), c[1]);
  set(c[2], c[2]);
  set(neg(c[2]), neg(c[2]));
  return t;
}

// (e1, e2)(-e1, -e2), e3 and -e3 fixed: shape of M7.
DartPermutation::Table parallel_transpositions(const Cycle& c) {
  DartPermutation::Table t{};
  auto set = [&](int from, int to) { t[static_cast<std::size_t>(from)] = static_cast<std::uint8_t>(to); };
  set(c[0], c[1]);
  set(c[1], c[0]);
  set(neg(c[0]), neg(c[1]));
  set(neg(c[1]), neg(c[0]));
  set(c[2], c[2]);
  set(neg(c[2]), neg(c[2]));
  return t;
}

std::array<OrientedEdge, 3> witness_darts(const FaceDartSet& set, const Cycle& c) {
  return {set.dart(c[0]), set.dart(c[1]), set.dart(c[2])};
}

}  // namespace

// ---------------------------------------------------------------------------
// FaceDartSet / DartPermutation

FaceDartSet::FaceDartSet(const Face& face)
    : face_(face),
      darts_{OrientedEdge(face.vertices()[0], face.vertices()[1]), OrientedEdge(face.vertices()[1], face.vertices()[2]),
             OrientedEdge(face.vertices()[2], face.vertices()[0]), OrientedEdge(face.vertices()[1], face.vertices()[0]),
             OrientedEdge(face.vertices()[2], face.vertices()[1]), OrientedEdge(face.vertices()[0], face.vertices()[2])} {}

int FaceDartSet::index_of(const OrientedEdge& e) const {
  for (int i = 0; i < 6; ++i) {
    if (darts_[static_cast<std::size_t>(i)] == e) return i;
  }
  throw Error(ErrorCode::EdgeNotInFace, e.to_string() + " is not a dart of " + face_.to_string());
}

DartPermutation::DartPermutation(FaceDartSet set, Table table) : set_(std::move(set)), table_(table) {
  std::array<bool, 6> hit{};
  for (auto v : table_) {
    if (v >= 6 || hit[v]) throw Error(ErrorCode::InvalidType, "dart table is not a permutation");
    hit[v] = true;
  }
}

DartPermutation DartPermutation::identity(const FaceDartSet& set) { return {set, {0, 1, 2, 3, 4, 5}}; }

DartPermutation DartPermutation::face_rotation(const Face& face) {
  // ab->bc->ca->ab and ac->cb->ba->ac.
  return {FaceDartSet(face), {1, 2, 0, 5, 3, 4}};
}

DartPermutation DartPermutation::inverse() const {
  Table inv{};
  for (std::size_t i = 0; i < 6; ++i) inv[table_[i]] = static_cast<std::uint8_t>(i);
  return {set_, inv};
}

bool DartPermutation::is_identity() const {
  for (std::size_t i = 0; i < 6; ++i) {
    if (table_[i] != i) return false;
  }
  return true;
}

std::vector<int> DartPermutation::cycle_type() const {
  std::vector<int> lengths;
  std::array<bool, 6> seen{};
  for (int i = 0; i < 6; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int x = i; !seen[x]; x = (*this)(x)) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::string DartPermutation::to_string() const {
  std::string out;
  std::array<bool, 6> seen{};
  for (int i = 0; i < 6; ++i) {
    if (seen[i] || (*this)(i) == i) continue;
    out += "(";
    for (int x = i; !seen[x]; x = (*this)(x)) {
      seen[x] = true;
      if (x != i) out += ",";
      out += dart_text(set_.dart(x));
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

DartPermutation operator*(const DartPermutation& a, const DartPermutation& b) {
  if (!(a.set_ == b.set_)) throw Error(ErrorCode::InvalidType, "composing permutations of different faces");
  DartPermutation::Table t{};
  for (std::size_t i = 0; i < 6; ++i) t[i] = a.table_[b.table_[i]];
  return {a.set_, t};
}

// ---------------------------------------------------------------------------
// z-monodromy

DartPermutation z_monodromy(const Triangulation& t, FaceIndex f) {
  const Tri& tri = t.tri(f);
  auto in_face = [&](VertexIndex v) { return v == tri[0] || v == tri[1] || v == tri[2]; };
  const std::size_t limit = position_count(t);
  DartPermutation::Table table{};
  for (int s = 0; s < kSlotsPerFace; ++s) {
    const PositionId start = f * kSlotsPerFace + static_cast<PositionId>(s);
    PositionId p = start;
    std::size_t steps = 0;
    while (true) {
      p = step(t, p);
      if (++steps > limit) {
        throw Error(ErrorCode::UnclassifiableMonodromy, "zigzag did not return to face " + t.face(f).to_string());
      }
      Dart d = position_dart(t, p);
      if (in_face(d.tail) && in_face(d.head)) {
        // The dart's slot inside f is the same index as in FaceDartSet.
        table[static_cast<std::size_t>(s)] =
            static_cast<std::uint8_t>(position_id(t, f, d) - f * kSlotsPerFace);
        break;
      }
    }
  }
  return {FaceDartSet(t.face(f)), table};
}

DartPermutation z_monodromy(const Triangulation& t, const Face& f) { return z_monodromy(t, t.require_face(f)); }

// ---------------------------------------------------------------------------
// Classification

std::string_view to_string(MonodromyTag tag) {
  switch (tag) {
    case MonodromyTag::M1: return "M1";
    case MonodromyTag::M2: return "M2";
    case MonodromyTag::M3: return "M3";
    case MonodromyTag::M4: return "M4";
    case MonodromyTag::M5: return "M5";
    case MonodromyTag::M6: return "M6";
    case MonodromyTag::M7: return "M7";
  }
  return "?";
}

MonodromyTag parse_monodromy_tag(std::string_view text) {
  for (int i = 1; i <= 7; ++i) {
    auto tag = static_cast<MonodromyTag>(i);
    if (to_string(tag) == text) return tag;
  }
  throw Error(ErrorCode::InvalidType, "unknown monodromy type '" + std::string(text) + "'");
}

DartPermutation expand(const MonodromyType& type, const FaceDartSet& set) {
  const DartPermutation d = DartPermutation::face_rotation(set.face());
  auto cycle = [&]() {
    if (!type.witness) throw Error(ErrorCode::InvalidType, "missing witness cycle");
    const auto& w = *type.witness;
    return Cycle{set.index_of(w[0]), set.index_of(w[1]), set.index_of(w[2])};
  };
  switch (type.tag) {
    case MonodromyTag::M1: return DartPermutation::identity(set);
    case MonodromyTag::M2: return d;
    case MonodromyTag::M5: return d.inverse();
    case MonodromyTag::M3:
    case MonodromyTag::M6: return {set, three_cycle_shape(cycle())};
    case MonodromyTag::M4: return {set, crossed_transpositions(cycle())};
    case MonodromyTag::M7: return {set, parallel_transpositions(cycle())};
  }
  throw Error(ErrorCode::InvalidType, "unknown monodromy tag");
}

MonodromyType classify(const DartPermutation& m, const DartPermutation& d) {
  if (!(m.set() == d.set())) throw Error(ErrorCode::InvalidType, "monodromy and rotation act on different faces");
  const FaceDartSet& set = m.set();
  if (m.is_identity()) return {MonodromyTag::M1, std::nullopt};
  if (m == d) return {MonodromyTag::M2, std::nullopt};
  if (m == d.inverse()) return {MonodromyTag::M5, std::nullopt};

  const std::vector<Cycle> forward = rotations(three_cycles(d));
  const std::vector<Cycle> backward = rotations(three_cycles(d.inverse()));

  for (const Cycle& c : forward) {
    if (m.table() == three_cycle_shape(c)) return {MonodromyTag::M3, witness_darts(set, c)};
  }
  for (const Cycle& c : backward) {
    if (m.table() == three_cycle_shape(c)) return {MonodromyTag::M6, witness_darts(set, c)};
  }
  for (const Cycle& c : forward) {
    if (m.table() == crossed_transpositions(c)) return {MonodromyTag::M4, witness_darts(set, c)};
  }
  for (const Cycle& c : forward) {
    if (m.table() == parallel_transpositions(c)) return {MonodromyTag::M7, witness_darts(set, c)};
  }
  throw Error(ErrorCode::UnclassifiableMonodromy,
              "monodromy " + m.to_string() + " of " + set.face().to_string() + " matches no type");
}

bool is_two_disjoint_3cycles(const DartPermutation& p) { return p.cycle_type() == std::vector<int>{3, 3}; }

bool locally_z_knotted_via_monodromy(const Triangulation& t, const Face& f) {
  FaceIndex fi = t.require_face(f);
  return is_two_disjoint_3cycles(DartPermutation::face_rotation(t.face(fi)) * z_monodromy(t, fi));
}

std::vector<FaceMonodromy> monodromy_table(const Triangulation& t) {
  std::vector<FaceMonodromy> out;
  out.reserve(t.face_count());
  for (FaceIndex f = 0; f < t.face_count(); ++f) {
    DartPermutation m = z_monodromy(t, f);
    MonodromyType type = classify(m, DartPermutation::face_rotation(t.face(f)));
    out.push_back({t.face(f), std::move(m), std::move(type)});
  }
  return out;
}

std::vector<MonodromyTag> face_types(const Triangulation& t) {
  std::vector<MonodromyTag> out;
  out.reserve(t.face_count());
  for (FaceIndex f = 0; f < t.face_count(); ++f) {
    out.push_back(classify(z_monodromy(t, f), DartPermutation::face_rotation(t.face(f))).tag);
  }
  return out;
}

}  // namespace zknot
