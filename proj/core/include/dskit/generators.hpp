#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dskit/balanced.hpp"
#include "dskit/complex.hpp"

namespace dskit::gen {

/// A constructed complex and, for families that have one, its canonical coloring.
struct GeneratedComplex {
  Complex complex;
  std::optional<ColorMap> colors;
};

/// Boundary of the simplex on d+1 vertices (a (d-1)-sphere, so the result has this d).
GeneratedComplex simplex_boundary(int d);

/// Boundary of the d-dimensional cross-polytope on vertices 1..2d. The
/// antipodal pair {2i-1, 2i} gets color i, so the coloring is completely balanced.
GeneratedComplex cross_polytope_boundary(int d);

/// Triangulated annulus: bottom cycle 1..k, top cycle k+1..2k, 2k triangles.
GeneratedComplex cylinder(int k = 3);

/// A triangle split into three by an interior vertex 4.
GeneratedComplex subdivided_triangle();

/// k triangles sharing the edge {1,2}.
GeneratedComplex glued_triangles(int k);

/// k tetrahedra sharing the edge {1,2}.
GeneratedComplex glued_tetrahedra(int k);

/// Two octahedron boundaries with one antipodal pair of the second identified
/// with the pair {1,2} of the first. Eulerian but not a homology manifold.
GeneratedComplex double_banana();

/// double_banana() without its lexicographically last triangle.
GeneratedComplex double_banana_minus_triangle();

/// Order complex of the non-empty faces. Vertex i is the i-th non-empty face
/// (by cardinality, then lexicographically) and is colored by its cardinality.
/// The coloring is balanced of type (1,...,1) when the input is pure.
GeneratedComplex barycentric_subdivision(const Complex& complex);

/// Seeded random complex on vertices 1..n: round(density * 2n) facets (at least
/// one) of mixed sizes 1..max_facet_size (0 means min(n, 6)).
GeneratedComplex random(std::uint64_t seed, int n, double density, int max_facet_size = 0);

/// Seeded random balanced complex of the given type: color i has class_sizes[i]
/// vertices and every facet takes a_i of them.
GeneratedComplex random_balanced(std::uint64_t seed, const Exponent& type, const std::vector<int>& class_sizes,
                                 int num_facets);

/// Family names accepted by generate(), in a stable order.
std::vector<std::string> families();

/// Builds a family from textual parameters. barycentric-subdivision needs `input`.
/// ValidationError for unknown families or bad parameters.
GeneratedComplex generate(const std::string& family, const std::vector<std::string>& params,
                          const std::optional<Complex>& input = std::nullopt);

}  // namespace dskit::gen
