#include <catch2/catch.hpp>

#include "helpers.hpp"

using dskit::Complex;
using dskit::Face;

TEST_CASE("Face set operations", "[face]") {
  Face a = Face::from_indices({0, 3, 5});
  Face b = Face::from_indices({3, 5});
  CHECK(a.size() == 3);
  CHECK(b.is_subset_of(a));
  CHECK_FALSE(a.is_subset_of(b));
  CHECK(a.minus(b) == Face::from_indices({0}));
  CHECK(b.with(0) == a);
  CHECK(a.without(0) == b);
  CHECK(a.indices() == std::vector<std::size_t>{0, 3, 5});
  CHECK(Face().empty());
  CHECK(Face().dimension() == -1);

  int subsets = 0;
  a.for_each_subset([&](const Face& s) {
    CHECK(s.is_subset_of(a));
    ++subsets;
  });
  CHECK(subsets == 8);
}

TEST_CASE("Faces beyond the inline word", "[face]") {
  Face big = Face::from_indices({1, 64, 130});
  CHECK(big.size() == 3);
  CHECK(big.contains(130));
  CHECK_FALSE(big.contains(65));
  // Removing the high bits must compare equal to a face that never had them.
  CHECK(big.without(130).without(64) == Face::from_indices({1}));
  CHECK(big.without(130).without(64).hash() == Face::from_indices({1}).hash());
  CHECK(lex_less(Face::from_indices({1, 64}), Face::from_indices({1, 130})));
  CHECK(big.intersects(Face::from_indices({64})));
}

TEST_CASE("from_facets closes downward and absorbs", "[complex]") {
  Complex c = Complex::from_facets({{1, 2, 3}, {2, 3}, {3, 4}});
  CHECK(c.d() == 3);
  CHECK(c.num_vertices() == 4);
  CHECK(c.num_faces() == 1 + 4 + 4 + 1);
  CHECK(c.facet_labels() == std::vector<std::vector<dskit::VertexId>>{{1, 2, 3}, {3, 4}});
  CHECK_FALSE(c.is_pure());
  CHECK(c.contains(testing::face(c, {1, 3})));
  CHECK_FALSE(c.contains(testing::face(c, {1, 4})));
  CHECK(dskit::describe_face(c, testing::face(c, {3, 1})) == "{1,3}");
}

TEST_CASE("the complex with only the empty face", "[complex]") {
  Complex c;
  CHECK(c.d() == 0);
  CHECK(c.num_faces() == 1);
  CHECK(Complex::from_facets({}).num_faces() == 1);
  CHECK(Complex::from_facets({{}}).num_faces() == 1);
  CHECK(c.facet_labels().empty());
}

TEST_CASE("invalid facet lists", "[complex]") {
  CHECK_THROWS_AS(Complex::from_facets({{0, 1}}), dskit::ValidationError);
  CHECK_THROWS_AS(Complex::from_facets({{-2}}), dskit::ValidationError);
  CHECK_THROWS_AS(Complex::from_facets({{1, 1, 2}}), dskit::ValidationError);
  // 2^20 faces from a single 20-vertex facet exceeds a cap of 1000.
  std::vector<dskit::VertexId> big(20);
  for (int i = 0; i < 20; ++i) big[i] = i + 1;
  CHECK_THROWS_AS(Complex::from_facets({big}, 1000), dskit::ResourceLimitError);
}

TEST_CASE("face lattice matches brute-force closure", "[complex][property]") {
  testing::FacetSource src(2024);
  for (int trial = 0; trial < 200; ++trial) {
    auto facets = src.draw();
    Complex c = Complex::from_facets(facets);
    oracle::Faces expected = oracle::closure(facets);
    REQUIRE(c.num_faces() == expected.size());
    for (const auto& f : c.faces()) {
      auto labels = c.labels_of(f);
      CHECK(expected.count(oracle::Set(labels.begin(), labels.end())) == 1);
    }
    // flat order: ascending cardinality, lexicographic inside a size
    for (std::size_t i = 1; i < c.num_faces(); ++i) {
      const auto& p = c.faces()[i - 1];
      const auto& q = c.faces()[i];
      CHECK((p.size() < q.size() || (p.size() == q.size() && lex_less(p, q))));
    }
    CHECK(dskit::is_downward_closed(c.faces()));
  }
}

TEST_CASE("link of a face", "[complex]") {
  Complex c = Complex::from_facets({{1, 2, 3}, {1, 3, 4}, {4, 5}});
  Complex lk = dskit::link(c, testing::face(c, {1}));
  CHECK(lk.facet_labels() == std::vector<std::vector<dskit::VertexId>>{{2, 3}, {3, 4}});
  CHECK(dskit::link(c, Face()).num_faces() == c.num_faces());
  Complex lk13 = dskit::link(c, testing::face(c, {1, 3}));
  CHECK(lk13.facet_labels() == std::vector<std::vector<dskit::VertexId>>{{2}, {4}});
  // link of a facet is {empty}
  CHECK(dskit::link(c, testing::face(c, {4, 5})).num_faces() == 1);
  CHECK_THROWS_AS(dskit::link(c, testing::face(c, {2, 5})), dskit::DomainError);
}

TEST_CASE("faces by dimension", "[complex]") {
  Complex c = Complex::from_facets({{1, 2}, {3}});
  auto groups = dskit::faces_by_dim(c);
  REQUIRE(groups.size() == 3);
  CHECK(groups[0].size() == 1);
  CHECK(groups[1].size() == 3);
  CHECK(groups[2].size() == 1);
  CHECK_FALSE(dskit::is_downward_closed({Face::from_indices({0, 1})}));
}
