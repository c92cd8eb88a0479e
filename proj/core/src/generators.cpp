#include "dskit/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace dskit::gen {

namespace {

using Facets = std::vector<std::vector<VertexId>>;

void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

// Uniform in [0, bound) by rejection, so the stream is the same on every platform.
std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

// k distinct elements of pool, in ascending order.
std::vector<VertexId> sample(std::mt19937_64& rng, std::vector<VertexId> pool, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = i + static_cast<std::size_t>(uniform(rng, pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

Facets octahedron(VertexId first) {
  Facets out;
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<VertexId> f;
    for (int i = 0; i < 3; ++i) f.push_back(first + 2 * i + ((mask >> i) & 1));
    out.push_back(f);
  }
  return out;
}

long long parse_int(const std::string& s, const std::string& what) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  require(ec == std::errc() && ptr == s.data() + s.size(), what + ": expected an integer, got '" + s + "'");
  return v;
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    require(used == s.size(), "");
    return v;
  } catch (const std::exception&) {
    throw ValidationError(what + ": expected a number, got '" + s + "'");
  }
}

std::vector<int> parse_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(',', start);
    if (end == std::string::npos) end = s.size();
    out.push_back(static_cast<int>(parse_int(s.substr(start, end - start), what)));
    start = end + 1;
  }
  return out;
}

}  // namespace

GeneratedComplex simplex_boundary(int d) {
  require(d >= 1, "simplex-boundary: d must be at least 1");
  require(d <= 24, "simplex-boundary: d must be at most 24");
  Facets facets;
  for (int skip = 1; skip <= d + 1; ++skip) {
    std::vector<VertexId> f;
    for (int v = 1; v <= d + 1; ++v) {
      if (v != skip) f.push_back(v);
    }
    facets.push_back(f);
  }
  return {Complex::from_facets(facets), std::nullopt};
}

GeneratedComplex cross_polytope_boundary(int d) {
  require(d >= 1, "cross-polytope-boundary: d must be at least 1");
  require(d <= 20, "cross-polytope-boundary: d must be at most 20");
  Facets facets;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    std::vector<VertexId> f;
    for (int i = 0; i < d; ++i) f.push_back(2 * i + 1 + static_cast<VertexId>((mask >> i) & 1));
    facets.push_back(f);
  }
  ColorMap colors;
  for (int v = 1; v <= 2 * d; ++v) colors[v] = (v + 1) / 2;
  return {Complex::from_facets(facets), colors};
}

GeneratedComplex cylinder(int k) {
  require(k >= 3, "cylinder: k must be at least 3");
  Facets facets;
  for (int i = 0; i < k; ++i) {
    const VertexId b0 = 1 + i, b1 = 1 + (i + 1) % k;
    const VertexId t0 = k + 1 + i, t1 = k + 1 + (i + 1) % k;
    facets.push_back({b0, b1, t0});
    facets.push_back({b1, t0, t1});
  }
  return {Complex::from_facets(facets), std::nullopt};
}

GeneratedComplex subdivided_triangle() {
  return {Complex::from_facets({{1, 2, 4}, {2, 3, 4}, {1, 3, 4}}), std::nullopt};
}

GeneratedComplex glued_triangles(int k) {
  require(k >= 2, "glued-triangles: k must be at least 2");
  Facets facets;
  for (int i = 1; i <= k; ++i) facets.push_back({1, 2, 2 + i});
  return {Complex::from_facets(facets), std::nullopt};
}

GeneratedComplex glued_tetrahedra(int k) {
  require(k >= 2, "glued-tetrahedra: k must be at least 2");
  Facets facets;
  for (int i = 1; i <= k; ++i) facets.push_back({1, 2, 2 * i + 1, 2 * i + 2});
  return {Complex::from_facets(facets), std::nullopt};
}

GeneratedComplex double_banana() {
  // Second octahedron on 7..12, then 7 -> 1, 8 -> 2 and 9..12 -> 7..10.
  Facets facets = octahedron(1);
  for (auto f : octahedron(7)) {
    for (auto& v : f) v = (v <= 8) ? v - 6 : v - 2;
    std::sort(f.begin(), f.end());
    facets.push_back(f);
  }
  ColorMap colors;
  for (VertexId v = 1; v <= 6; ++v) colors[v] = static_cast<int>((v + 1) / 2);
  for (VertexId v = 7; v <= 10; ++v) colors[v] = static_cast<int>((v - 7) / 2 + 2);
  return {Complex::from_facets(facets), colors};
}

GeneratedComplex double_banana_minus_triangle() {
  auto banana = double_banana();
  Facets facets = banana.complex.facet_labels();
  facets.pop_back();
  return {Complex::from_facets(facets), banana.colors};
}

GeneratedComplex barycentric_subdivision(const Complex& complex) {
  const auto& faces = complex.faces();
  // Vertex id of a face is its flat position (the empty face sits at 0).
  Facets facets;
  std::vector<std::size_t> order;
  for (const auto& facet : complex.facets()) {
    if (facet.empty()) continue;
    order = facet.indices();
    // Each ordering of the facet's vertices is one maximal chain: grow the
    // face one vertex at a time.
    std::sort(order.begin(), order.end());
    do {
      std::vector<VertexId> chain;
      Face current;
      for (std::size_t v : order) {
        current = current.with(v);
        chain.push_back(static_cast<VertexId>(*complex.index_of(current)));
      }
      std::sort(chain.begin(), chain.end());
      facets.push_back(std::move(chain));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  ColorMap colors;
  for (std::size_t i = 1; i < faces.size(); ++i) colors[static_cast<VertexId>(i)] = static_cast<int>(faces[i].size());
  return {Complex::from_facets(facets), colors};
}

GeneratedComplex random(std::uint64_t seed, int n, double density, int max_facet_size) {
  require(n >= 1 && n <= 62, "random: n must be in 1..62");
  require(density > 0 && density <= 1, "random: density must be in (0, 1]");
  if (max_facet_size <= 0) max_facet_size = std::min(n, 6);
  require(max_facet_size <= n, "random: max facet size exceeds n");
  std::mt19937_64 rng(seed);
  std::vector<VertexId> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  const int count = std::max(1, static_cast<int>(std::lround(density * 2 * n)));
  Facets facets;
  for (int t = 0; t < count; ++t) {
    auto size = 1 + static_cast<std::size_t>(uniform(rng, static_cast<std::uint64_t>(max_facet_size)));
    facets.push_back(sample(rng, pool, size));
  }
  return {Complex::from_facets(facets), std::nullopt};
}

GeneratedComplex random_balanced(std::uint64_t seed, const Exponent& type, const std::vector<int>& class_sizes,
                                 int num_facets) {
  require(!type.empty(), "random-balanced: type must have at least one color");
  require(class_sizes.size() == type.size(), "random-balanced: one class size per color");
  require(num_facets >= 1, "random-balanced: need at least one facet");
  std::mt19937_64 rng(seed);
  ColorMap colors;
  std::vector<std::vector<VertexId>> classes(type.size());
  VertexId next = 1;
  for (std::size_t i = 0; i < type.size(); ++i) {
    require(type[i] >= 0 && class_sizes[i] >= type[i], "random-balanced: class size below type entry");
    for (int j = 0; j < class_sizes[i]; ++j) {
      colors[next] = static_cast<int>(i + 1);
      classes[i].push_back(next++);
    }
  }
  Facets facets;
  for (int t = 0; t < num_facets; ++t) {
    std::vector<VertexId> f;
    for (std::size_t i = 0; i < type.size(); ++i) {
      auto part = sample(rng, classes[i], static_cast<std::size_t>(type[i]));
      f.insert(f.end(), part.begin(), part.end());
    }
    std::sort(f.begin(), f.end());
    facets.push_back(f);
  }
  return {Complex::from_facets(facets), colors};
}

std::vector<std::string> families() {
  return {"simplex-boundary",  "cross-polytope-boundary", "cylinder",
          "subdivided-triangle", "glued-triangles",       "glued-tetrahedra",
          "double-banana",     "double-banana-minus-triangle", "barycentric-subdivision",
          "random",            "random-balanced"};
}

GeneratedComplex generate(const std::string& family, const std::vector<std::string>& params,
                          const std::optional<Complex>& input) {
  auto arity = [&](std::size_t lo, std::size_t hi) {
    require(params.size() >= lo && params.size() <= hi,
            family + ": expected " + std::to_string(lo) + (lo == hi ? "" : ".." + std::to_string(hi)) +
                " parameter(s), got " + std::to_string(params.size()));
  };
  auto int_at = [&](std::size_t i) { return static_cast<int>(parse_int(params.at(i), family)); };

  if (family == "simplex-boundary") {
    arity(1, 1);
    return simplex_boundary(int_at(0));
  }
  if (family == "cross-polytope-boundary") {
    arity(1, 1);
    return cross_polytope_boundary(int_at(0));
  }
  if (family == "cylinder") {
    arity(0, 1);
    return cylinder(params.empty() ? 3 : int_at(0));
  }
  if (family == "subdivided-triangle") {
    arity(0, 0);
    return subdivided_triangle();
  }
  if (family == "glued-triangles") {
    arity(0, 1);
    return glued_triangles(params.empty() ? 3 : int_at(0));
  }
  if (family == "glued-tetrahedra") {
    arity(0, 1);
    return glued_tetrahedra(params.empty() ? 3 : int_at(0));
  }
  if (family == "double-banana") {
    arity(0, 0);
    return double_banana();
  }
  if (family == "double-banana-minus-triangle") {
    arity(0, 0);
    return double_banana_minus_triangle();
  }
  if (family == "barycentric-subdivision") {
    arity(0, 0);
    require(input.has_value(), "barycentric-subdivision: needs an input complex");
    return barycentric_subdivision(*input);
  }
  if (family == "random") {
    arity(3, 4);
    auto seed = parse_int(params[0], family);
    require(seed >= 0, "random: seed must be non-negative");
    return random(static_cast<std::uint64_t>(seed), int_at(1), parse_double(params[2], family),
                  params.size() > 3 ? int_at(3) : 0);
  }
  if (family == "random-balanced") {
    // SEED TYPE FACETS [CLASS_SIZES], lists comma separated.
    arity(3, 4);
    auto seed = parse_int(params[0], family);
    require(seed >= 0, "random-balanced: seed must be non-negative");
    Exponent type = parse_list(params[1], family);
    std::vector<int> sizes;
    if (params.size() > 3) {
      sizes = parse_list(params[3], family);
    } else {
      for (int a : type) sizes.push_back(a + 2);
    }
    return random_balanced(static_cast<std::uint64_t>(seed), type, sizes, int_at(2));
  }
  throw ValidationError("unknown family '" + family + "'");
}

}  // namespace dskit::gen
