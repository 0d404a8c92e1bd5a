#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "zknot/core_map.hpp"
#include "zknot/generators.hpp"
#include "zknot/io.hpp"
#include "zknot/monodromy.hpp"
#include "zknot/shredding.hpp"
#include "zknot/surgery.hpp"
#include "zknot/zigzag.hpp"

namespace zknot::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kInvalid = 2;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

Face parse_face_arg(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 3) throw Error(ErrorCode::SyntaxError, "--face expects A,B,C, got '" + text + "'");
  return Face(parts[0], parts[1], parts[2]);
}

long long parse_int(const std::string& text, const std::string& what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::SyntaxError, what + " must be an integer, got '" + text + "'");
  }
  return value;
}

int as_int(const std::string& text, const std::string& what) {
  long long v = parse_int(text, what);
  if (v < -1000000 || v > 1000000) throw Error(ErrorCode::ParameterOutOfRange, what + " out of range");
  return static_cast<int>(v);
}

void emit(const std::string& path, const std::string& document, std::ostream& out) {
  if (path.empty()) {
    out << document;
  } else {
    write_file(path, document);
  }
}

std::string join_labels(const std::vector<VertexId>& labels) {
  std::string s;
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? " " : "") + labels[i].label();
  return s;
}

ordered_json face_json(const Face& f) {
  return ordered_json::array({f.vertices()[0].label(), f.vertices()[1].label(), f.vertices()[2].label()});
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_gen(const std::string& family, const std::vector<std::string>& params, const std::string& output,
            std::ostream& out) {
  auto need = [&](std::size_t n) {
    if (params.size() != n) {
      throw Error(ErrorCode::SyntaxError,
                  "family '" + family + "' takes " + std::to_string(n) + " parameter(s)");
    }
  };
  Metadata meta;
  meta.family = family;
  Triangulation t;
  if (family == "bipyramid") {
    need(1);
    int n = as_int(params[0], "n");
    t = bipyramid(n);
    meta.name = "BP_" + std::to_string(n);
    meta.parameters["n"] = n;
  } else if (family == "tetrahedron" || family == "octahedron" || family == "icosahedron") {
    need(0);
    t = platonic(family == "tetrahedron"  ? Platonic::Tetrahedron
                 : family == "octahedron" ? Platonic::Octahedron
                                          : Platonic::Icosahedron);
    meta.name = family;
  } else if (family == "torus") {
    need(2);
    int p = as_int(params[0], "p"), q = as_int(params[1], "q");
    t = torus_grid(p, q);
    meta.name = "torus_grid(" + std::to_string(p) + "," + std::to_string(q) + ")";
    meta.parameters["p"] = p;
    meta.parameters["q"] = q;
  } else if (family == "projective-plane") {
    need(0);
    t = projective_plane_fig5();
    meta.name = "projective plane, 6 vertices";
  } else if (family == "sum") {
    need(3);
    const std::string& v = params[0];
    SumVariant variant;
    if (v == "m1") {
      variant = SumVariant::M1;
    } else if (v == "m2") {
      variant = SumVariant::M2;
    } else if (v == "m6") {
      variant = SumVariant::M6;
    } else {
      throw Error(ErrorCode::SyntaxError, "sum variant must be m1, m2 or m6");
    }
    int k = as_int(params[1], "k"), k2 = as_int(params[2], "k'");
    t = example_sum(variant, k, k2);
    meta.name = v + "(" + std::to_string(k) + "," + std::to_string(k2) + ")";
    meta.parameters["k"] = k;
    meta.parameters["k2"] = k2;
  } else if (family == "random") {
    need(2);
    long long seed = parse_int(params[0], "seed");
    if (seed < 0) throw Error(ErrorCode::ParameterOutOfRange, "seed must be non-negative");
    int steps = as_int(params[1], "steps");
    t = random_sphere(static_cast<std::uint64_t>(seed), steps);
    meta.name = "random_sphere(" + params[0] + "," + params[1] + ")";
    meta.parameters["seed"] = seed;
    meta.parameters["steps"] = steps;
  } else {
    throw Error(ErrorCode::SyntaxError,
                "unknown family '" + family +
                    "' (bipyramid, tetrahedron, octahedron, icosahedron, torus, projective-plane, sum, random)");
  }
  emit(output, serialize(t, meta), out);
  return kOk;
}

int cmd_validate(const std::string& file, bool json, std::ostream& out) {
  const std::vector<VertexTriple> faces = parse_face_list(read_file(file));
  const ValidationReport report = validate(faces);
  if (json) {
    ordered_json doc;
    doc["ok"] = report.ok();
    doc["violations"] = ordered_json::array();
    for (const auto& v : report.violations) {
      doc["violations"].push_back({{"rule", std::string(to_string(v.rule))}, {"subject", v.subject},
                                   {"message", v.message}});
    }
    out << doc.dump(2) << "\n";
  } else if (report.ok()) {
    out << "ok\n";
  } else {
    for (const auto& v : report.violations) {
      out << to_string(v.rule) << (v.subject.empty() ? "" : " " + v.subject) << ": " << v.message << "\n";
    }
  }
  return report.ok() ? kOk : kFalse;
}

int cmd_euler(const std::string& file, bool json, std::ostream& out) {
  const Triangulation t = parse(read_file(file));
  const long chi = euler_characteristic(t);
  const bool orientable = is_orientable(t);
  if (json) {
    ordered_json doc{{"vertices", t.vertex_count()}, {"edges", t.edge_count()}, {"faces", t.face_count()},
                     {"euler_characteristic", chi}, {"orientable", orientable}};
    out << doc.dump(2) << "\n";
  } else {
    out << "V=" << t.vertex_count() << " E=" << t.edge_count() << " F=" << t.face_count() << " chi=" << chi
        << " orientable=" << (orientable ? "yes" : "no") << "\n";
  }
  return kOk;
}

int cmd_zigzags(const std::string& file, bool json, std::ostream& out) {
  const Triangulation t = parse(read_file(file));
  const ZigzagAtlas atlas = all_zigzags(t);
  if (json) {
    ordered_json doc;
    doc["count"] = atlas.size();
    doc["z_knotted"] = atlas.size() == 2;
    doc["zigzags"] = ordered_json::array();
    for (std::size_t i = 0; i < atlas.size(); ++i) {
      const Zigzag& z = atlas.zigzags[i];
      ordered_json darts = ordered_json::array();
      for (const auto& d : z.darts()) darts.push_back({d.tail().label(), d.head().label()});
      doc["zigzags"].push_back({{"index", i}, {"length", z.length()}, {"simple", is_simple(z)},
                                {"reverse", atlas.reverse[i]}, {"darts", darts}});
    }
    out << doc.dump(2) << "\n";
  } else {
    out << atlas.size() << " zigzags (" << atlas.size() / 2 << " pairs)\n";
    for (std::size_t i = 0; i < atlas.size(); ++i) {
      const Zigzag& z = atlas.zigzags[i];
      out << "#" << i << " length=" << z.length() << " simple=" << (is_simple(z) ? "yes" : "no")
          << " reverse=#" << atlas.reverse[i] << ": " << join_labels(z.vertex_cycle()) << "\n";
    }
  }
  return kOk;
}

int cmd_knotted(const std::string& file, std::ostream& out) {
  const Triangulation t = parse(read_file(file));
  const std::size_t pairs = orbit_partition(t).orbits.size() / 2;
  const bool knotted = is_z_knotted(t);
  out << (knotted ? "z-knotted" : "not z-knotted") << " (" << pairs << " zigzag pair" << (pairs == 1 ? "" : "s")
      << ")\n";
  return knotted ? kOk : kFalse;
}

int cmd_monodromy(const std::string& file, const std::string& face, bool json, std::ostream& out) {
  const Triangulation t = parse(read_file(file));
  std::vector<FaceMonodromy> rows;
  if (face.empty()) {
    rows = monodromy_table(t);
  } else {
    const Face f = parse_face_arg(face);
    DartPermutation m = z_monodromy(t, f);
    MonodromyType type = classify(m, DartPermutation::face_rotation(f));
    rows.push_back({f, std::move(m), std::move(type)});
  }
  auto witness_text = [](const MonodromyType& type) {
    if (!type.witness) return std::string("-");
    std::string s = "(";
    for (std::size_t i = 0; i < 3; ++i) s += (i ? "," : "") + (*type.witness)[i].to_string();
    return s + ")";
  };
  if (json) {
    ordered_json doc = ordered_json::array();
    for (const auto& row : rows) {
      doc.push_back({{"face", face_json(row.face)},
                     {"type", std::string(to_string(row.type.tag))},
                     {"witness", witness_text(row.type)},
                     {"permutation", row.monodromy.to_string()},
                     {"locally_z_knotted", is_knotted_type(row.type.tag)}});
    }
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& row : rows) {
      out << row.face.to_string() << "\t" << to_string(row.type.tag) << "\t" << witness_text(row.type) << "\t"
          << row.monodromy.to_string() << "\n";
    }
  }
  return kOk;
}

int cmd_consum(const std::vector<std::string>& files, const std::vector<std::string>& faces,
               const std::string& map, const std::string& output, std::ostream& out) {
  if (files.size() != 2 || faces.size() != 2) {
    throw Error(ErrorCode::SyntaxError, "consum needs two files, each followed by --face");
  }
  const Triangulation t = parse(read_file(files[0]));
  const Triangulation t2 = parse(read_file(files[1]));
  const Face f = parse_face_arg(faces[0]);
  const Face f2 = parse_face_arg(faces[1]);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const std::string& item : split(map, ',')) {
    auto kv = split(item, ':');
    if (kv.size() != 2) throw Error(ErrorCode::SyntaxError, "--map expects X:U,Y:V,Z:W");
    pairs.emplace_back(VertexId(kv[0]), VertexId(kv[1]));
  }
  const SpecialMap g = SpecialMap::from_pairs(f, f2, pairs);
  const SumResult sum = connected_sum(t, f, t2, f2, g);
  Metadata meta;
  meta.family = "connected-sum";
  emit(output, serialize(sum.triangulation, meta), out);
  if (!output.empty()) {
    const Triangulation& s = sum.triangulation;
    out << "V=" << s.vertex_count() << " E=" << s.edge_count() << " F=" << s.face_count()
        << " chi=" << euler_characteristic(s) << " z-knotted=" << (is_z_knotted(s) ? "yes" : "no")
        << " prefix=" << sum.prefix << "\n";
  }
  return kOk;
}

int cmd_shred(const std::string& file, const std::string& output, const std::string& certificate,
              std::ostream& out) {
  const Triangulation t = parse(read_file(file));
  const ShredResult result = shred(t);
  Metadata meta;
  meta.family = "shredding";
  emit(output, serialize(result.output, meta), out);
  if (!certificate.empty()) write_file(certificate, serialize_certificate(result.certificate));
  if (!output.empty()) {
    out << "steps=" << result.certificate.steps.size() << " faces=" << result.output.face_count()
        << " zigzag_length=" << result.certificate.final_zigzag_length << "\n";
  }
  return kOk;
}

int cmd_verify(const std::vector<std::string>& files, std::ostream& out) {
  const Triangulation input = parse(read_file(files.at(0)));
  const ShredCertificate cert = parse_certificate(read_file(files.at(1)));
  const Triangulation output = parse(read_file(files.at(2)));
  const CertificateCheck check = verify_certificate(input, cert, output);
  out << check.report << "\n";
  return check.ok ? kOk : kFalse;
}

int cmd_gauss(const std::string& file, bool json, std::ostream& out) {
  const Triangulation t = parse(read_file(file));
  const std::vector<Edge> word = gauss_code(t);
  if (json) {
    ordered_json doc = ordered_json::array();
    for (const Edge& e : word) doc.push_back({e.lo().label(), e.hi().label()});
    out << doc.dump() << "\n";
  } else {
    for (std::size_t i = 0; i < word.size(); ++i) out << (i ? " " : "") << word[i].to_string();
    out << "\n";
  }
  return kOk;
}

void report_error(std::ostream& err, std::string_view code, const std::string& message) {
  err << ordered_json{{"error", std::string(code)}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"zknot: zigzags, z-monodromy and z-knotted shreddings of surface triangulations", "zknot"};
  app.require_subcommand(1);

  std::function<int()> action;
  std::string file, output, face, map, certificate, family;
  std::vector<std::string> params, files, faces;
  bool json = false;

  auto* gen = app.add_subcommand("gen", "Generate a named triangulation");
  gen->add_option("family", family, "bipyramid|tetrahedron|octahedron|icosahedron|torus|projective-plane|sum|random")
      ->required();
  gen->add_option("params", params, "Family parameters");
  gen->add_option("-o,--output", output, "Write to FILE instead of stdout");
  gen->callback([&] { action = [&] { return cmd_gen(family, params, output, out); }; });

  auto* val = app.add_subcommand("validate", "Check the triangulation axioms (exit 0 ok, 1 violations)");
  val->add_option("file", file)->required();
  val->add_flag("--json", json);
  val->callback([&] { action = [&] { return cmd_validate(file, json, out); }; });

  auto* euler = app.add_subcommand("euler", "Counts, Euler characteristic and orientability");
  euler->add_option("file", file)->required();
  euler->add_flag("--json", json);
  euler->callback([&] { action = [&] { return cmd_euler(file, json, out); }; });

  auto* zz = app.add_subcommand("zigzags", "List all zigzags");
  zz->add_option("file", file)->required();
  zz->add_flag("--json", json);
  zz->callback([&] { action = [&] { return cmd_zigzags(file, json, out); }; });

  auto* knot = app.add_subcommand("knotted", "Exit 0 if z-knotted, 1 if not");
  knot->add_option("file", file)->required();
  knot->callback([&] { action = [&] { return cmd_knotted(file, out); }; });

  auto* mono = app.add_subcommand("monodromy", "Per-face z-monodromy types");
  mono->add_option("file", file)->required();
  mono->add_option("--face", face, "Only this face, as A,B,C");
  mono->add_flag("--json", json);
  mono->callback([&] { action = [&] { return cmd_monodromy(file, face, json, out); }; });

  auto* sum = app.add_subcommand("consum", "Connected sum: consum A --face X,Y,Z B --face U,V,W --map X:U,Y:V,Z:W");
  std::string file_b;
  sum->add_option("first", file, "First summand")->required();
  sum->add_option("second", file_b, "Second summand")->required();
  sum->add_option("--face", faces, "Glued face of each summand, in order")
      ->required()
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
      ->allow_extra_args(false);
  sum->add_option("--map", map, "Vertex map X:U,Y:V,Z:W")->required();
  sum->add_option("-o,--output", output);
  sum->callback([&] { action = [&] { return cmd_consum({file, file_b}, faces, map, output, out); }; });

  auto* sh = app.add_subcommand("shred", "Build a z-knotted shredding");
  sh->add_option("file", file)->required();
  sh->add_option("-o,--output", output);
  sh->add_option("--certificate", certificate, "Write the replayable certificate here");
  sh->callback([&] { action = [&] { return cmd_shred(file, output, certificate, out); }; });

  auto* ver = app.add_subcommand("verify", "Replay a certificate: verify INPUT CERT OUTPUT (exit 0 ok, 1 mismatch)");
  ver->add_option("files", files)->required()->expected(3);
  ver->callback([&] { action = [&] { return cmd_verify(files, out); }; });

  auto* gauss = app.add_subcommand("gauss", "Gauss code of a z-knotted triangulation");
  gauss->add_option("file", file)->required();
  gauss->add_flag("--json", json);
  gauss->callback([&] { action = [&] { return cmd_gauss(file, json, out); }; });

  std::vector<std::string> argv_storage{"zknot"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report_error(err, "UsageError", e.what());
    return kInvalid;
  }

  try {
    return action();
  } catch (const Error& e) {
    report_error(err, to_string(e.code()), e.what());
    return kInvalid;
  } catch (const std::exception& e) {
    report_error(err, "InternalError", e.what());
    return kInvalid;
  }
}

}  // namespace zknot::cli
