#pragma once

// z-knotted shredding: replace every face of type M5, M6 or M7 by gluing a
// z-knotted sphere onto it until every face is locally z-knotted.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "zknot/core_map.hpp"
#include "zknot/monodromy.hpp"
#include "zknot/surgery.hpp"

namespace zknot {

enum class PatchId {
  IdentitySum,  // BP_6 # BP_6 glued by a->2', 1->a', 2->1'; face {a,2,3} has type M1
  Bipyramid3,   // BP_3; face {1,2,a} has type M3
};

std::string_view to_string(PatchId id);
PatchId parse_patch_id(std::string_view text);  // throws InvalidType

struct Patch {
  PatchId id;
  Triangulation triangulation;
  Face designated_face;
  MonodromyTag designated_type;
};

// M5 and M6 faces take the identity-monodromy patch; M7 faces take BP_3.
// The returned patch has been checked: a z-knotted sphere, all faces
// essential, designated face of the designated type. Throws InvalidType.
const Patch& patch_for(MonodromyTag bad_type);

// First special map (enumeration order) satisfying the gluing condition.
// Throws NoValidMap.
SpecialMap find_gluing_map(const Triangulation& t, const Face& f, const Patch& patch);

struct ShredStep {
  Face bad_face;
  MonodromyTag bad_type;
  PatchId patch;
  SpecialMap map;
  std::string prefix;
  std::map<VertexId, VertexId> relabeling;

  friend bool operator==(const ShredStep&, const ShredStep&) = default;
};

struct ShredCertificate {
  std::vector<ShredStep> steps;
  std::size_t final_zigzag_length = 0;

  friend bool operator==(const ShredCertificate&, const ShredCertificate&) = default;
};

struct ShredResult {
  Triangulation output;
  ShredCertificate certificate;
};

// One gluing at a face of type M5/M6/M7. Throws InvalidType for other faces.
Triangulation shred_step(const Triangulation& t, const Face& f);

// Label prefix "s<step>." with step >= 1; a colliding step number is bumped.
ShredStep plan_shred_step(const Triangulation& t, const Face& f, int step);
Triangulation apply_shred_step(const Triangulation& t, const ShredStep& step);

ShredResult shred(const Triangulation& t);

struct CertificateCheck {
  bool ok = false;
  std::string report;
};

CertificateCheck verify_certificate(const Triangulation& input, const ShredCertificate& certificate,
                                    const Triangulation& output);

}  // namespace zknot
