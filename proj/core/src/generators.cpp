#include "zknot/generators.hpp"

#include <random>

#include "zknot/surgery.hpp"

namespace zknot {

namespace {

std::string num(int i) { return std::to_string(i); }

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::ParameterOutOfRange, message);
}

}  // namespace

Triangulation bipyramid(int n) {
  require(n >= 3, "bipyramid needs n >= 3, got " + num(n));
  std::vector<std::array<std::string, 3>> faces;
  for (int i = 1; i <= n; ++i) {
    const int j = i % n + 1;
    faces.push_back({num(i), num(j), "a"});
    faces.push_back({num(i), num(j), "b"});
  }
  return build_triangulation(faces);
}

Triangulation platonic(Platonic which) {
  switch (which) {
    case Platonic::Tetrahedron:
      return build_triangulation({{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}});
    case Platonic::Octahedron:
      return bipyramid(4);
    case Platonic::Icosahedron: {
      std::vector<std::array<std::string, 3>> faces;
      for (int i = 0; i < 5; ++i) {
        const int u = 2 + i, u_next = 2 + (i + 1) % 5;
        const int l = 7 + i, l_next = 7 + (i + 1) % 5;
        faces.push_back({"1", num(u), num(u_next)});
        faces.push_back({"12", num(l), num(l_next)});
        faces.push_back({num(u), num(u_next), num(l)});
        faces.push_back({num(u_next), num(l), num(l_next)});
      }
      return build_triangulation(faces);
    }
  }
  throw Error(ErrorCode::ParameterOutOfRange, "unknown Platonic solid");
}

Triangulation torus_grid(int p, int q) {
  require(p >= 3 && q >= 3, "torus grid needs p, q >= 3");
  auto v = [&](int i, int j) { return num((i % p) * q + (j % q) + 1); };
  std::vector<std::array<std::string, 3>> faces;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) {
      faces.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
      faces.push_back({v(i, j), v(i, j + 1), v(i + 1, j + 1)});
    }
  }
  return build_triangulation(faces);
}

Triangulation projective_plane_fig5() {
  return build_triangulation({{"a", "c", "d"},
                              {"a", "b", "d"},
                              {"c", "d", "f"},
                              {"b", "d", "e"},
                              {"d", "e", "f"},
                              {"b", "c", "f"},
                              {"b", "c", "e"},
                              {"a", "b", "f"},
                              {"a", "e", "f"},
                              {"a", "c", "e"}});
}

Triangulation example_sum(SumVariant variant, int k, int k2) {
  require(k % 2 == 1 && k2 % 2 == 1 && k >= 1 && k2 >= 1, "example sums need odd k and k'");
  const bool even_gons = variant == SumVariant::M1;
  if (even_gons) require(k > 1 && k2 > 1, "the M1 example needs k, k' > 1");
  const Triangulation first = bipyramid(even_gons ? 2 * k : 2 * k + 1);
  const Triangulation second = bipyramid(even_gons ? 2 * k2 : 2 * k2 + 1);
  const Face s("a", "1", "2");
  // images of the sorted vertices 1, 2, a
  std::array<VertexId, 3> images;
  switch (variant) {
    case SumVariant::M1: images = {VertexId("a"), VertexId("1"), VertexId("2")}; break;
    case SumVariant::M2: images = {VertexId("1"), VertexId("2"), VertexId("a")}; break;
    case SumVariant::M6: images = {VertexId("2"), VertexId("a"), VertexId("1")}; break;
  }
  return connected_sum(first, s, second, s, SpecialMap(s, s, images), 1).triangulation;
}

Triangulation random_sphere(std::uint64_t seed, int steps) {
  require(steps >= 0, "random sphere needs steps >= 0");
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  Triangulation current = bipyramid(uniform(3, 9));
  for (int step = 1; step <= steps; ++step) {
    const Triangulation patch = bipyramid(uniform(3, 9));
    const std::vector<Face> faces = current.faces();
    const std::vector<Face> patch_faces = patch.faces();
    const Face& f = faces[static_cast<std::size_t>(uniform(0, static_cast<int>(faces.size()) - 1))];
    const Face& f2 = patch_faces[static_cast<std::size_t>(uniform(0, static_cast<int>(patch_faces.size()) - 1))];
    const auto maps = enumerate_special_maps(f, f2);
    current = connected_sum(current, f, patch, f2, maps[static_cast<std::size_t>(uniform(0, 5))], step).triangulation;
  }
  return current;
}

}  // namespace zknot
