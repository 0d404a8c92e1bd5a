#pragma once

// Named triangulations and a seeded random generator of spheres.

#include <cstdint>
#include <string>
#include <string_view>

#include "zknot/core_map.hpp"

namespace zknot {

// Vertices 1..n on the equator plus the poles a and b. Requires n >= 3.
Triangulation bipyramid(int n);

enum class Platonic { Tetrahedron, Octahedron, Icosahedron };

// Tetrahedron on 1..4; octahedron as the bipyramid over a square;
// icosahedron on 1..12 (pole 1, rings 2..6 and 7..11, pole 12).
Triangulation platonic(Platonic which);

// p x q grid on the torus, vertex (i, j) labelled i*q + j + 1, every cell
// split by the diagonal from (i, j) to (i+1, j+1). Requires p, q >= 3.
Triangulation torus_grid(int p, int q);

// Six-vertex triangulation of the real projective plane on a..f.
Triangulation projective_plane_fig5();

enum class SumVariant { M1, M2, M6 };

// Connected sum of two bipyramids along {a,1,2} and {a',1',2'}; the second
// summand's labels get the prefix "s1.".
//   M1: BP_2k # BP_2k', k, k' odd > 1,  a->2', 1->a', 2->1'
//   M2: BP_2k+1 # BP_2k'+1, k, k' odd,  a->a', 1->1', 2->2'
//   M6: BP_2k+1 # BP_2k'+1, k, k' odd,  a->1', 1->2', 2->a'
Triangulation example_sum(SumVariant variant, int k, int k2);

// Deterministic in seed: a random bipyramid BP_n, 3 <= n <= 9, then `steps`
// connected sums with random bipyramids at random faces and maps.
Triangulation random_sphere(std::uint64_t seed, int steps);

}  // namespace zknot
