#include <catch2/catch.hpp>

#include "helpers.hpp"

using dskit::DeltaCoeffs;
using dskit::Exponent;
using dskit::Integer;
using dskit::IntPoly;
using dskit::MPoly;

TEST_CASE("binomial and sign helpers", "[poly]") {
  CHECK(dskit::binomial(5, 2) == 10);
  CHECK(dskit::binomial(5, 0) == 1);
  CHECK(dskit::binomial(5, 6) == 0);
  CHECK(dskit::binomial(5, -1) == 0);
  CHECK(dskit::binomial(0, 0) == 1);
  CHECK(dskit::binomial(60, 30) == Integer("118264581564861424"));
  CHECK_THROWS_AS(dskit::binomial(-1, 0), dskit::DomainError);
  CHECK(dskit::sign_pow(-3) == -1);
  CHECK(dskit::sign_pow(4) == 1);
}

TEST_CASE("decimal conversion", "[poly]") {
  Integer big = Integer(1) << 100;
  CHECK(dskit::parse_decimal(dskit::to_decimal(big)) == big);
  CHECK(dskit::parse_decimal("-17") == -17);
  CHECK_THROWS_AS(dskit::parse_decimal("12a"), dskit::ParseError);
  CHECK_THROWS_AS(dskit::parse_decimal(""), dskit::ParseError);
  CHECK_THROWS_AS(dskit::to_int64(big), dskit::OverflowError);
  CHECK(dskit::to_int64(Integer(-5)) == -5);
}

TEST_CASE("IntPoly arithmetic", "[poly]") {
  IntPoly p{1, 2, 3};  // 1 + 2x + 3x^2
  IntPoly q{0, 1};     // x
  CHECK((p * q) == IntPoly{0, 1, 2, 3});
  CHECK((p + q) == IntPoly{1, 3, 3});
  CHECK((p - p).is_zero());
  CHECK(p.degree() == 2);
  CHECK(IntPoly().degree() == -1);
  CHECK(p.evaluate(2) == 17);
  CHECK(p.coefficient(10) == 0);
  // equality ignores the degree bound
  CHECK(p.with_degree_bound(6) == p);
  CHECK_THROWS_AS(p.with_degree_bound(1), dskit::DomainError);
  // p(-x-1) = 1 - 2(x+1) + 3(x+1)^2 = 2 + 4x + 3x^2
  CHECK(p.compose_affine(-1, -1) == IntPoly{2, 4, 3});
  CHECK(p.reversed() == IntPoly{3, 2, 1});
  CHECK(IntPoly::binomial_power(3, 1) == IntPoly{1, 3, 3, 1});
  CHECK(IntPoly{-2, 0, 0, 3}.to_string() == "3x^3 - 2");
  CHECK(IntPoly().to_string() == "0");
}

TEST_CASE("delta basis expansion matches direct multiplication", "[poly]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = rng() % 10;
    std::vector<Integer> c(d + 1);
    for (auto& v : c) v = static_cast<long long>(rng() % 41) - 20;
    IntPoly p = dskit::delta_expand(DeltaCoeffs{c});
    CHECK(oracle::poly_equal(testing::coeffs(p), oracle::delta_expand(c)));
    CHECK(dskit::monomial_to_delta(p.with_degree_bound(d)).coeffs == c);
  }
}

TEST_CASE("monomial to delta coordinates", "[poly]") {
  // x^2 = (x+1) x^2 - x^3 in degree 3
  auto c = dskit::monomial_to_delta(IntPoly::monomial(2, 3));
  CHECK(c.coeffs == std::vector<Integer>{-1, 1, 0, 0});
  // x^d is the i = 0 basis element, 1 = ((x+1) - x)^d
  auto one = dskit::monomial_to_delta(IntPoly::monomial(0, 2));
  CHECK(one.coeffs == std::vector<Integer>{1, -2, 1});
}

TEST_CASE("exponent helpers", "[poly]") {
  Exponent a{2, 1};
  std::vector<Exponent> seen;
  dskit::for_each_exponent_below(a, [&](const Exponent& b) { seen.push_back(b); });
  CHECK(seen == std::vector<Exponent>{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}});
  CHECK(dskit::exponent_lattice_size(a) == 6);
  CHECK(dskit::multi_binomial({3, 2}, {1, 1}) == 6);
  CHECK(dskit::exponent_leq({1, 1}, a));
  CHECK_FALSE(dskit::exponent_leq({0, 2}, a));
  CHECK(dskit::exponent_to_string({1, 0, 2}) == "(1,0,2)");
  int calls = 0;
  dskit::for_each_exponent_below({}, [&](const Exponent& b) {
    CHECK(b.empty());
    ++calls;
  });
  CHECK(calls == 1);
}

TEST_CASE("MPoly arithmetic and specialization", "[poly]") {
  MPoly p({1, 1});
  p.add_term({1, 0}, 2);
  p.add_term({0, 1}, 3);
  MPoly q({1, 0});
  q.add_term({0, 0}, 1);
  q.add_term({1, 0}, 1);
  MPoly prod = p * q;  // (2x + 3y)(1 + x)
  CHECK(prod.coefficient({2, 0}) == 2);
  CHECK(prod.coefficient({1, 1}) == 3);
  CHECK(prod.coefficient({0, 1}) == 3);
  CHECK(prod.specialize() == IntPoly{0, 5, 5});
  MPoly zero = p - p;
  CHECK(zero.is_zero());
  CHECK_THROWS_AS(p.add_term({2, 0}, 1), dskit::DomainError);
}

TEST_CASE("multivariate delta basis against direct products", "[poly]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + rng() % 3;
    Exponent a(m);
    for (auto& ai : a) ai = static_cast<int>(rng() % 3);
    dskit::MDeltaCoeffs c{a, {}};
    oracle::MPoly expected;
    dskit::for_each_exponent_below(a, [&](const Exponent& b) {
      Integer v = static_cast<long long>(rng() % 11) - 5;
      c.coeffs[b] = v;
      // v * x^b (x+1)^(a-b)
      auto term = oracle::mmul(oracle::mpow_linear(b, 0), oracle::mpow_linear(dskit::exponent_sub(a, b), 1));
      for (auto& [e, coef] : term) coef *= v;
      expected = oracle::madd(expected, term);
    });
    MPoly p = dskit::mdelta_expand(c);
    oracle::MPoly got(p.terms().begin(), p.terms().end());
    CHECK(got == expected);
    auto back = dskit::mmonomial_to_delta(p);
    for (const auto& [b, v] : c.coeffs) CHECK(back.coeffs[b] == v);
  }
}
