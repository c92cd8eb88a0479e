#include <catch2/catch.hpp>

#include "helpers.hpp"

using dskit::Complex;
using dskit::FieldSpec;

namespace {

// Six-vertex real projective plane.
Complex rp2() {
  return Complex::from_facets({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                               {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}});
}

}  // namespace

TEST_CASE("field specs", "[homology]") {
  CHECK(FieldSpec::parse("q").is_rational());
  CHECK(FieldSpec::parse("Q").is_rational());
  CHECK(FieldSpec::parse("7").characteristic() == 7);
  CHECK_THROWS_AS(FieldSpec::parse("4"), dskit::ValidationError);
  CHECK_THROWS_AS(FieldSpec::parse("x"), dskit::ValidationError);
  CHECK(FieldSpec::prime(2).to_string() == "2");
}

TEST_CASE("Betti numbers of standard spaces", "[homology]") {
  auto oct = dskit::gen::cross_polytope_boundary(3).complex;
  CHECK(dskit::reduced_betti(oct).values == std::vector<std::size_t>{0, 0, 0, 1});

  auto cyl = dskit::gen::cylinder().complex;
  CHECK(dskit::reduced_betti(cyl).values == std::vector<std::size_t>{0, 0, 1, 0});

  CHECK(dskit::reduced_betti(Complex()).values == std::vector<std::size_t>{1});
  CHECK(dskit::reduced_betti(Complex::from_facets({{1}, {2}})).values == std::vector<std::size_t>{0, 1});

  auto banana = dskit::gen::double_banana().complex;
  auto b = dskit::reduced_betti(banana);
  CHECK(b(1) == 1);
  CHECK(b(2) == 2);
  CHECK(b.euler_characteristic() == dskit::reduced_euler(banana));
}

TEST_CASE("projective plane depends on the characteristic", "[homology]") {
  auto c = rp2();
  CHECK(dskit::reduced_betti(c, FieldSpec::rationals()).values == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK(dskit::reduced_betti(c, FieldSpec::prime(2)).values == std::vector<std::size_t>{0, 0, 1, 1});
  CHECK(dskit::reduced_betti(c, FieldSpec::prime(3)).values == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK(dskit::is_homology_manifold(c, FieldSpec::rationals()).is_manifold);
  CHECK(dskit::is_homology_manifold(c, FieldSpec::prime(2)).is_manifold);
}

TEST_CASE("Betti numbers agree with dense elimination", "[homology][property]") {
  testing::FacetSource src(31337);
  for (int trial = 0; trial < 120; ++trial) {
    Complex c = Complex::from_facets(src.draw(7, 6));
    auto faces = oracle::closure(c.facet_labels());
    for (long long p : {0LL, 2LL, 5LL}) {
      FieldSpec field = p == 0 ? FieldSpec::rationals() : FieldSpec::prime(static_cast<std::uint32_t>(p));
      auto betti = dskit::reduced_betti(c, field);
      CHECK(betti.values == oracle::reduced_betti(faces, p));
      if (p == 0) CHECK(betti.euler_characteristic() == dskit::reduced_euler(c));
    }
  }
}

TEST_CASE("homology manifold verdicts", "[homology]") {
  auto cyl = dskit::gen::cylinder().complex;
  CHECK(dskit::is_homology_manifold(cyl).is_manifold);

  auto glued = dskit::gen::glued_triangles(3).complex;
  auto v = dskit::is_homology_manifold(glued);
  CHECK_FALSE(v.is_manifold);
  REQUIRE(v.witness);
  CHECK(glued.labels_of(*v.witness) == std::vector<dskit::VertexId>{1, 2});

  auto banana = dskit::gen::double_banana().complex;
  auto vb = dskit::is_homology_manifold(banana);
  CHECK_FALSE(vb.is_manifold);
  REQUIRE(vb.witness);
  CHECK(banana.labels_of(*vb.witness) == std::vector<dskit::VertexId>{1});
  REQUIRE(vb.witness_betti);
  CHECK((*vb.witness_betti)(0) == 1);
  CHECK((*vb.witness_betti)(1) == 2);
}

TEST_CASE("homological boundary", "[homology]") {
  auto cyl = dskit::gen::cylinder().complex;
  auto boundary = dskit::boundary_faces_homological(cyl);
  CHECK(boundary.size() == 13);
  CHECK(dskit::is_downward_closed(boundary));

  auto oct = dskit::gen::cross_polytope_boundary(3).complex;
  CHECK(dskit::boundary_faces_homological(oct).size() == 1);

  Complex edge = Complex::from_facets({{1, 2}});
  auto be = dskit::boundary_faces_homological(edge);
  CHECK(be.size() == 3);

  CHECK_THROWS_AS(dskit::boundary_faces_homological(dskit::gen::glued_triangles(3).complex), dskit::PreconditionError);
}

TEST_CASE("homological and multiplicity boundaries coincide on manifolds", "[homology]") {
  std::vector<Complex> corpus = {dskit::gen::cylinder().complex,
                                 dskit::gen::cylinder(5).complex,
                                 dskit::gen::subdivided_triangle().complex,
                                 dskit::gen::cross_polytope_boundary(4).complex,
                                 dskit::gen::simplex_boundary(3).complex,
                                 Complex::from_facets({{1, 2, 3, 4}}),
                                 Complex::from_facets({{1, 2}, {2, 3}}),
                                 rp2()};
  for (const auto& c : corpus) {
    REQUIRE(dskit::is_homology_manifold(c).is_manifold);
    dskit::MultiplicityTable table(c);
    CHECK(table.is_reciprocal());
    CHECK(dskit::boundary_faces_homological(c) == dskit::boundary_faces(table));
  }
}

TEST_CASE("link homology cache", "[homology]") {
  auto cyl = dskit::gen::cylinder().complex;
  dskit::LinkHomology lh(cyl, FieldSpec::rationals());
  auto v1 = testing::face(cyl, {1});
  CHECK(lh.is_sphere_or_ball(v1));
  CHECK_FALSE(lh.is_sphere(v1));
  auto e = testing::face(cyl, {1, 2});  // rim edge: link is one vertex
  CHECK_FALSE(lh.is_sphere(e));
  auto inner = testing::face(cyl, {2, 4});  // interior edge
  CHECK(lh.is_sphere(inner));
}
