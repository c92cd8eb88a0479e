#pragma once

#include <random>
#include <vector>

#include "dskit/dskit.hpp"
#include "oracles.hpp"

namespace testing {

using Facets = std::vector<std::vector<dskit::VertexId>>;

inline Facets facets_of(const dskit::Complex& c) {
  return c.facet_labels();
}

inline oracle::Faces faces_of(const dskit::Complex& c) { return oracle::closure(facets_of(c)); }

inline oracle::Poly coeffs(const dskit::IntPoly& p) {
  return oracle::Poly(p.coefficients().begin(), p.coefficients().end());
}

inline dskit::Face face(const dskit::Complex& c, std::vector<dskit::VertexId> ids) { return c.face_from_labels(ids); }

/// Random facet lists for property tests: n vertices, a handful of facets of
/// random size, so most draws are non-pure.
class FacetSource {
 public:
  explicit FacetSource(std::uint64_t seed) : rng_(seed) {}

  Facets draw(int max_vertices = 8, int max_facets = 6) {
    const int n = pick(1, max_vertices);
    const int count = pick(1, max_facets);
    Facets out;
    for (int t = 0; t < count; ++t) {
      std::vector<dskit::VertexId> f;
      for (int v = 1; v <= n; ++v) {
        if (pick(0, 2) == 0) f.push_back(v);
      }
      if (f.empty()) f.push_back(pick(1, n));
      out.push_back(f);
    }
    return out;
  }

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testing
