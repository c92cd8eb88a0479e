#include "dskit/stanley_reisner.hpp"

#include "dskit/enumeration.hpp"

namespace dskit {

namespace {

RelationReport start(std::string name, const Complex& complex) {
  RelationReport r;
  r.relation = std::move(name);
  r.d = complex.d();
  r.chi_reduced = reduced_euler(complex);
  r.m_empty = sign_pow(static_cast<std::int64_t>(r.d) - 1) * r.chi_reduced;
  return r;
}

IntPoly power(const IntPoly& p, std::size_t n) {
  IntPoly out = IntPoly::constant(1);
  for (std::size_t i = 0; i < n; ++i) out = out * p;
  return out;
}

// deg-homogenized substitution: sum_i p_i num^i den^(deg-i), i.e.
// den^deg * p(num/den).
IntPoly substitute(const IntPoly& p, std::size_t deg, const IntPoly& num, const IntPoly& den) {
  IntPoly out;
  for (std::size_t i = 0; i <= p.degree_bound(); ++i) {
    if (p.coefficient(i) == 0) continue;
    out += p.coefficient(i) * (power(num, i) * power(den, deg - i));
  }
  return out;
}

MPoly variable_poly(std::size_t m, std::size_t i, long long constant) {
  Exponent unit(m, 0);
  unit[i] = 1;
  MPoly p(unit);
  p.add_term(Exponent(m, 0), constant);
  p.add_term(unit, 1);
  return p;
}

// Multivariate version: prod_i den_i^a_i * p(num_1/den_1, ..., num_m/den_m),
// with num_i = x_i + 1 and den_i = x_i.
MPoly substitute_reciprocal(const MPoly& p, const Exponent& a) {
  const std::size_t m = a.size();
  MPoly out(a);
  for (const auto& [b, c] : p.terms()) {
    MPoly term(Exponent(m, 0));
    term.add_term(Exponent(m, 0), c);
    for (std::size_t i = 0; i < m; ++i) {
      for (int e = 0; e < b[i]; ++e) term = term * variable_poly(m, i, 1);
      Exponent unit(m, 0);
      unit[i] = 1;
      MPoly x(unit);
      x.add_term(unit, 1);
      for (int e = b[i]; e < a[i]; ++e) term = term * x;
    }
    out += term;
  }
  return out;
}

// (1 - lambda)^n
IntPoly one_minus_power(std::size_t n) {
  return IntPoly::binomial_power(n, -1) * Integer(sign_pow(static_cast<std::int64_t>(n)));
}

}  // namespace

HilbertSeries hilbert_series(const Complex& complex) {
  return HilbertSeries{h_vector(f_vector(complex)).tilde(), complex.d()};
}

ColoredHilbertSeries hilbert_series(const Complex& complex, const Coloring& coloring) {
  return ColoredHilbertSeries{flag_polynomial(flag_h(complex, coloring)), coloring.type()};
}

RelationReport verify_hilbert_series(const Complex& complex) {
  auto r = start("hilbert-series", complex);
  HilbertSeries s = hilbert_series(complex);
  FVector f = f_vector(complex);
  const std::size_t d = s.denominator_exponent;
  IntPoly faces(d);
  for (std::size_t i = 0; i <= d; ++i) {
    faces += f.entries[i] * (IntPoly::monomial(i, i) * one_minus_power(d - i));
  }
  r.add_polynomial("", s.numerator, faces);
  r.lhs_poly = s.numerator;
  r.rhs_poly = faces;
  return r;
}

RelationReport verify_hilbert_series(const Complex& complex, const Coloring& coloring) {
  auto r = start("colored-hilbert-series", complex);
  ColoredHilbertSeries s = hilbert_series(complex, coloring);
  r.add_polynomial("", s.numerator, flag_polynomial(flag_h_by_expansion(complex, coloring)));
  return r;
}

RelationReport verify_sr_reciprocity(const Complex& complex) {
  auto r = start("sr-reciprocity", complex);
  HilbertSeries s = hilbert_series(complex);
  const std::size_t d = s.denominator_exponent;
  const IntPoly num{1, 1};  // x + 1
  const IntPoly den{0, 1};  // x
  // x^d N((x+1)/x) over x^d (1 - (x+1)/x)^d; the latter is the constant (-1)^d.
  IntPoly top = substitute(s.numerator, d, num, den);
  IntPoly bottom = substitute(one_minus_power(d), d, num, den);
  if (bottom.degree() != 0 || (bottom.coefficient(0) != 1 && bottom.coefficient(0) != -1)) {
    throw DomainError("sr-reciprocity: cleared denominator is not a unit");
  }
  IntPoly sr = top * Integer(sign_pow(static_cast<std::int64_t>(d)) * bottom.coefficient(0));

  IntPoly direct = delta_expand(DeltaCoeffs{h_vector(f_vector(complex)).entries});
  IntPoly faces = MultiplicityTable(complex).weighted_face_polynomial();
  r.add_polynomial("direct:", sr, direct);
  r.add_polynomial("faces:", sr, faces);
  r.lhs_poly = sr;
  r.rhs_poly = faces;
  return r;
}

RelationReport verify_sr_reciprocity_colored(const Complex& complex, const Coloring& coloring) {
  auto r = start("sr-reciprocity-colored", complex);
  ColoredHilbertSeries s = hilbert_series(complex, coloring);
  const Exponent& a = s.denominator_exponents;
  // Each factor x_i^a_i (1 - (x_i+1)/x_i)^a_i is (-1)^a_i, so the cleared
  // denominator is (-1)^d and cancels the leading sign.
  MPoly sr = substitute_reciprocal(s.numerator, a);

  MDeltaCoeffs c{a, {}};
  for (const auto& [b, value] : flag_h(complex, coloring).values) c.coeffs[exponent_sub(a, b)] = value;
  MPoly direct = mdelta_expand(c);

  MultiplicityTable table(complex);
  MPoly faces(a);
  for (std::size_t i = 0; i < complex.num_faces(); ++i) faces.add_term(b_of(complex.faces()[i], coloring), table.at_index(i));
  r.add_polynomial("direct:", sr, direct);
  r.add_polynomial("faces:", sr, faces);
  return r;
}

}  // namespace dskit
