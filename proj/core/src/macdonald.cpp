#include "dskit/macdonald.hpp"

namespace dskit {

IntPoly macdonald_p(const FVector& f) {
  std::vector<Integer> c(f.entries.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = sign_pow(static_cast<std::int64_t>(i)) * f.entries[i];
  return IntPoly(std::move(c));
}

IntPoly macdonald_q_doubled(const FVector& f, const FVector& boundary) {
  return macdonald_p(f) * Integer(2) - macdonald_p(boundary);
}

RelationReport verify_macdonald(const FVector& f, const FVector& boundary, const Integer& chi_reduced) {
  const std::size_t d = f.d();
  RelationReport r;
  r.relation = "macdonald";
  r.d = d;
  r.chi_reduced = chi_reduced;
  r.m_empty = sign_pow(static_cast<std::int64_t>(d) - 1) * chi_reduced;

  IntPoly q2 = macdonald_q_doubled(f, boundary);
  // cte is chi~ when d-1 is even, zero otherwise; doubled along with Q.
  Integer cte2 = (d % 2 == 1) ? Integer(2 * chi_reduced) : Integer(0);
  IntPoly lhs = q2.compose_affine(-1, 0) * Integer(sign_pow(static_cast<std::int64_t>(d)));
  IntPoly rhs = q2.compose_affine(1, 1) + IntPoly::constant(cte2);
  r.add_polynomial("", lhs, rhs);
  r.lhs_poly = lhs;
  r.rhs_poly = rhs;
  return r;
}

RelationReport verify_macdonald(const Complex& complex, std::optional<FieldSpec> homological) {
  FVector f = f_vector(complex);
  FVector boundary;
  if (homological) {
    boundary.entries.assign(complex.d() + 1, 0);
    for (const auto& face : boundary_faces_homological(complex, *homological)) boundary.entries[face.size()] += 1;
  } else {
    boundary = boundary_f_vector(f, interior_f_vector(MultiplicityTable(complex)));
  }
  return verify_macdonald(f, boundary, reduced_euler(f));
}

}  // namespace dskit
