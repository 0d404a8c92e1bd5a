#include "zknot/shredding.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "zknot/generators.hpp"
#include "zknot/zigzag.hpp"

namespace zknot {

namespace {

Patch make_patch(PatchId id) {
  Patch patch = id == PatchId::IdentitySum
                    ? Patch{id, example_sum(SumVariant::M1, 3, 3), Face("a", "2", "3"), MonodromyTag::M1}
                    : Patch{id, bipyramid(3), Face("a", "1", "2"), MonodromyTag::M3};
  const Triangulation& t = patch.triangulation;
  const Face& f = patch.designated_face;
  const std::vector<Face> faces = t.faces();
  const bool ok = is_z_knotted(t) && euler_characteristic(t) == 2 &&
                  classify(z_monodromy(t, f), DartPermutation::face_rotation(f)).tag == patch.designated_type &&
                  std::all_of(faces.begin(), faces.end(), [&](const Face& s) { return is_essential(t, s); });
  if (!ok) throw std::logic_error("patch " + std::string(to_string(id)) + " fails its invariants");
  return patch;
}

const Patch& patch_by_id(PatchId id) {
  static const Patch identity_sum = make_patch(PatchId::IdentitySum);
  static const Patch bipyramid3 = make_patch(PatchId::Bipyramid3);
  return id == PatchId::IdentitySum ? identity_sum : bipyramid3;
}

int step_of_prefix(const std::string& prefix) {
  int k = 0;
  const char* first = prefix.data() + 1;
  const char* last = prefix.data() + prefix.size() - 1;
  if (prefix.size() < 3 || prefix.front() != 's' || prefix.back() != '.' ||
      std::from_chars(first, last, k).ptr != last || k < 1) {
    throw Error(ErrorCode::SyntaxError, "malformed label prefix '" + prefix + "'");
  }
  return k;
}

struct PlannedStep {
  ShredStep record;
  Triangulation result;
};

PlannedStep plan(const Triangulation& t, const Face& f, int step) {
  const MonodromyTag type = classify(z_monodromy(t, f), DartPermutation::face_rotation(f)).tag;
  if (is_knotted_type(type)) {
    throw Error(ErrorCode::InvalidType, "face " + f.to_string() + " has type " + std::string(to_string(type)) +
                                            " and needs no shredding");
  }
  const Patch& patch = patch_for(type);
  SpecialMap g = find_gluing_map(t, f, patch);
  for (int k = step;; ++k) {
    try {
      SumResult sum = connected_sum(t, f, patch.triangulation, patch.designated_face, g, k);
      return {ShredStep{f, type, patch.id, std::move(g), sum.prefix, std::move(sum.relabeling)},
              std::move(sum.triangulation)};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::LabelCollision) throw;
    }
  }
}

std::size_t count_bad(const std::vector<MonodromyTag>& types) {
  return static_cast<std::size_t>(
      std::count_if(types.begin(), types.end(), [](MonodromyTag tag) { return !is_knotted_type(tag); }));
}

}  // namespace

std::string_view to_string(PatchId id) {
  return id == PatchId::IdentitySum ? "identity-sum" : "bipyramid-3";
}

PatchId parse_patch_id(std::string_view text) {
  if (text == "identity-sum") return PatchId::IdentitySum;
  if (text == "bipyramid-3") return PatchId::Bipyramid3;
  throw Error(ErrorCode::InvalidType, "unknown patch '" + std::string(text) + "'");
}

const Patch& patch_for(MonodromyTag bad_type) {
  switch (bad_type) {
    case MonodromyTag::M5:
    case MonodromyTag::M6: return patch_by_id(PatchId::IdentitySum);
    case MonodromyTag::M7: return patch_by_id(PatchId::Bipyramid3);
    default:
      throw Error(ErrorCode::InvalidType, "no patch for type " + std::string(to_string(bad_type)));
  }
}

SpecialMap find_gluing_map(const Triangulation& t, const Face& f, const Patch& patch) {
  for (const SpecialMap& g : enumerate_special_maps(f, patch.designated_face)) {
    if (gluing_condition(t, f, patch.triangulation, patch.designated_face, g)) return g;
  }
  throw Error(ErrorCode::NoValidMap, "no special map glues " + f.to_string() + " to patch " +
                                         std::string(to_string(patch.id)));
}

ShredStep plan_shred_step(const Triangulation& t, const Face& f, int step) { return plan(t, f, step).record; }

Triangulation shred_step(const Triangulation& t, const Face& f) { return plan(t, f, 1).result; }

Triangulation apply_shred_step(const Triangulation& t, const ShredStep& step) {
  const MonodromyTag actual = classify(z_monodromy(t, step.bad_face), DartPermutation::face_rotation(step.bad_face)).tag;
  if (actual != step.bad_type) {
    throw Error(ErrorCode::ValidationFailure, "face " + step.bad_face.to_string() + " has type " +
                                                  std::string(to_string(actual)) + ", certificate says " +
                                                  std::string(to_string(step.bad_type)));
  }
  const Patch& patch = patch_by_id(step.patch);
  if (step.map.target() != patch.designated_face) {
    throw Error(ErrorCode::InvalidSpecialMap, "map does not target the patch's designated face");
  }
  SumResult sum = connected_sum(t, step.bad_face, patch.triangulation, patch.designated_face, step.map,
                                step_of_prefix(step.prefix));
  if (sum.relabeling != step.relabeling) {
    throw Error(ErrorCode::ValidationFailure, "relabeling differs from the certificate");
  }
  return std::move(sum.triangulation);
}

ShredResult shred(const Triangulation& t) {
  ShredResult result{t, {}};
  std::vector<MonodromyTag> types = face_types(result.output);
  std::size_t bad = count_bad(types);
  while (bad > 0) {
    const auto first_bad = static_cast<FaceIndex>(
        std::find_if(types.begin(), types.end(), [](MonodromyTag tag) { return !is_knotted_type(tag); }) -
        types.begin());
    const int step = static_cast<int>(result.certificate.steps.size()) + 1;
    PlannedStep planned = plan(result.output, result.output.face(first_bad), step);
    result.output = std::move(planned.result);
    result.certificate.steps.push_back(std::move(planned.record));

    types = face_types(result.output);
    const std::size_t next_bad = count_bad(types);
    if (next_bad >= bad) throw std::logic_error("shredding step did not reduce the number of bad faces");
    bad = next_bad;
  }
  if (!is_z_knotted(result.output)) throw std::logic_error("shredding ended with all faces M1..M4 but not z-knotted");
  result.certificate.final_zigzag_length = orbit_partition(result.output).orbits.front().size();
  return result;
}

CertificateCheck verify_certificate(const Triangulation& input, const ShredCertificate& certificate,
                                    const Triangulation& output) {
  Triangulation current = input;
  for (std::size_t i = 0; i < certificate.steps.size(); ++i) {
    try {
      current = apply_shred_step(current, certificate.steps[i]);
    } catch (const Error& e) {
      return {false, "step " + std::to_string(i + 1) + ": " + e.what()};
    }
  }
  if (!(current == output)) {
    std::vector<Face> replayed = current.faces();
    std::vector<Face> claimed = output.faces();
    std::vector<Face> only_replayed, only_claimed;
    std::set_difference(replayed.begin(), replayed.end(), claimed.begin(), claimed.end(),
                        std::back_inserter(only_replayed));
    std::set_difference(claimed.begin(), claimed.end(), replayed.begin(), replayed.end(),
                        std::back_inserter(only_claimed));
    std::string report = "replayed output differs from the claimed output:";
    for (const Face& f : only_replayed) report += " +" + f.to_string();
    for (const Face& f : only_claimed) report += " -" + f.to_string();
    return {false, report};
  }
  if (!is_z_knotted(output)) return {false, "output is not z-knotted"};
  const std::size_t length = orbit_partition(output).orbits.front().size();
  if (length != certificate.final_zigzag_length) {
    return {false, "final zigzag length is " + std::to_string(length) + ", certificate says " +
                       std::to_string(certificate.final_zigzag_length)};
  }
  return {true, "ok: " + std::to_string(certificate.steps.size()) + " steps replayed"};
}

}  // namespace zknot
