#include "dskit/relations.hpp"

#include <string>

namespace dskit {

namespace {

RelationReport start(std::string name, std::size_t d, const Integer& chi_reduced) {
  RelationReport r;
  r.relation = std::move(name);
  r.d = d;
  r.chi_reduced = chi_reduced;
  r.m_empty = sign_pow(static_cast<std::int64_t>(d) - 1) * chi_reduced;
  return r;
}

RelationReport start(std::string name, const Complex& complex) {
  return start(std::move(name), complex.d(), reduced_euler(complex));
}

std::string k_term(std::size_t k) { return "k=" + std::to_string(k); }
std::string i_term(std::size_t i) { return "i=" + std::to_string(i); }

// sum_{i>=k} (-1)^(d-i) C(i,k) v_{i-1}, v given as v[i-1] = values[i-1].
Integer alternating_binomial_sum(const std::vector<Integer>& values, std::size_t d, std::size_t k) {
  Integer s = 0;
  for (std::size_t i = std::max<std::size_t>(k, 1); i <= d; ++i) {
    s += sign_pow(static_cast<std::int64_t>(d - i)) * binomial(static_cast<std::int64_t>(i), static_cast<std::int64_t>(k)) *
         values[i - 1];
  }
  return s;
}

}  // namespace

Integer ReciprocalFaceNumbers::m_empty() const {
  return sign_pow(static_cast<std::int64_t>(d()) - 1) * chi_reduced;
}

Classification classify(const Complex& complex, FieldSpec field, bool check_manifold) {
  MultiplicityTable table(complex);
  Classification c;
  c.field = field;
  c.reciprocal_witness = table.non_reciprocal_witness();
  c.semi_eulerian_witness = table.non_semi_eulerian_witness();
  c.reciprocal = !c.reciprocal_witness;
  c.semi_eulerian = !c.semi_eulerian_witness;
  if (!c.semi_eulerian) {
    c.eulerian_witness = c.semi_eulerian_witness;
  } else if (table.empty_face() != 1) {
    c.eulerian_witness = Face{};
  }
  c.eulerian = !c.eulerian_witness;
  if (check_manifold) {
    auto verdict = is_homology_manifold(complex, field);
    c.homology_manifold = verdict.is_manifold;
    c.manifold_witness = verdict.witness;
    c.manifold_witness_betti = verdict.witness_betti;
  }
  return c;
}

ReciprocalFaceNumbers reciprocal_face_numbers(const MultiplicityTable& table) {
  ReciprocalFaceNumbers n;
  n.interior = interior_f_vector(table);
  n.f = f_vector(table.complex());
  n.chi_reduced = reduced_euler(n.f);
  return n;
}

RelationReport verify_fh_tilde(const Complex& complex) {
  auto r = start("fh-tilde", complex);
  FVector f = f_vector(complex);
  HVector h = h_vector(f);
  // sum h_i x^i (x+1)^(d-i) is the delta expansion of the reversed h-vector.
  DeltaCoeffs c{std::vector<Integer>(h.entries.rbegin(), h.entries.rend())};
  IntPoly lhs = delta_expand(c);
  IntPoly rhs = f.tilde();
  r.add_polynomial("", lhs, rhs);
  r.lhs_poly = lhs;
  r.rhs_poly = rhs;
  return r;
}

RelationReport verify_reciprocity(const Complex& complex) {
  auto r = start("reciprocity", complex);
  HVector h = h_vector(f_vector(complex));
  IntPoly lhs = delta_expand(DeltaCoeffs{h.entries});
  IntPoly rhs = MultiplicityTable(complex).weighted_face_polynomial();
  r.add_polynomial("", lhs, rhs);
  r.lhs_poly = lhs;
  r.rhs_poly = rhs;
  return r;
}

RelationReport verify_ds_f(const ReciprocalFaceNumbers& n) {
  const std::size_t d = n.d();
  if (n.interior.d() != d) throw DomainError("verify_ds_f: interior vector has the wrong length");
  auto r = start("ds-f", d, n.chi_reduced);
  const auto& fint = n.interior.entries;

  for (std::size_t k = 1; k <= d; ++k) r.add(k_term(k), n.f.f(static_cast<int>(k) - 1), alternating_binomial_sum(fint, d, k));
  // k = 0: the empty face, corrected by m_empty.
  r.add(k_term(0), n.f.f(-1), alternating_binomial_sum(fint, d, 0) + sign_pow(static_cast<std::int64_t>(d)) * n.m_empty());

  Integer chi_int = 0;
  for (std::size_t i = 1; i <= d; ++i) chi_int += sign_pow(static_cast<std::int64_t>(i) - 1) * fint[i - 1];
  r.add("chi", reduced_euler(n.f) + 1, sign_pow(static_cast<std::int64_t>(d) - 1) * chi_int);

  // (-1)^d f~(x) = f~int(-x-1) + m_empty
  IntPoly lhs = n.f.tilde() * Integer(sign_pow(static_cast<std::int64_t>(d)));
  IntPoly rhs = n.interior.tilde().compose_affine(-1, -1) + IntPoly::constant(n.m_empty());
  r.add_polynomial("poly:", lhs, rhs);
  return r;
}

RelationReport verify_ds_f(const Complex& complex) {
  return verify_ds_f(reciprocal_face_numbers(MultiplicityTable(complex)));
}

RelationReport verify_ds_f_inverse(const ReciprocalFaceNumbers& n) {
  const std::size_t d = n.d();
  if (n.interior.d() != d) throw DomainError("verify_ds_f_inverse: interior vector has the wrong length");
  auto r = start("ds-f-inverse", d, n.chi_reduced);
  std::vector<Integer> nonempty(n.f.entries.begin() + 1, n.f.entries.end());
  for (std::size_t k = 1; k <= d; ++k) r.add(k_term(k), n.interior.f(static_cast<int>(k) - 1), alternating_binomial_sum(nonempty, d, k));

  // (-1)^d f~int(x) = f~(-x-1) - (-1)^d m_empty
  const int sd = sign_pow(static_cast<std::int64_t>(d));
  IntPoly lhs = n.interior.tilde() * Integer(sd);
  IntPoly rhs = n.f.tilde().compose_affine(-1, -1) - IntPoly::constant(sd * n.m_empty());
  r.add_polynomial("poly:", lhs, rhs);
  return r;
}

RelationReport verify_ds_f_inverse(const Complex& complex) {
  return verify_ds_f_inverse(reciprocal_face_numbers(MultiplicityTable(complex)));
}

RelationReport verify_ds_h(const Complex& complex) {
  auto r = start("ds-h", complex);
  const std::size_t d = complex.d();
  HVector h = h_vector(f_vector(complex));
  MultiplicityTable table(complex);

  std::vector<Integer> diff(d + 1);
  for (std::size_t i = 0; i <= d; ++i) diff[i] = h.h(i) - h.h(d - i);
  IntPoly lhs = delta_expand(DeltaCoeffs{diff});
  IntPoly rhs = table.weighted_face_polynomial() - f_vector(complex).tilde();
  r.add_polynomial("poly:", lhs, rhs);
  r.lhs_poly = lhs;
  r.rhs_poly = rhs;

  // eps summed by face cardinality, then weighted by C(d-|F|, i).
  std::vector<Integer> eps_by_size(d + 1);
  for (std::size_t idx = 0; idx < complex.num_faces(); ++idx) {
    eps_by_size[complex.faces()[idx].size()] += table.epsilon_at_index(idx);
  }
  for (std::size_t i = 0; i <= d; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j <= d; ++j) {
      s += binomial(static_cast<std::int64_t>(d - j), static_cast<std::int64_t>(i)) * eps_by_size[j];
    }
    r.add(i_term(i), h.h(d - i) - h.h(i), sign_pow(static_cast<std::int64_t>(i)) * s);
  }
  return r;
}

RelationReport verify_semi_eulerian_h(const Complex& complex) {
  MultiplicityTable table(complex);
  if (auto w = table.non_semi_eulerian_witness()) {
    throw PreconditionError("complex is not semi-Eulerian: face " + describe_face(complex, *w) + " has multiplicity " +
                                std::to_string(table.at(*w)),
                            complex.labels_of(*w));
  }
  auto r = start("semi-eulerian-h", complex);
  const std::size_t d = complex.d();
  HVector h = h_vector(f_vector(complex));
  const Integer defect = r.chi_reduced - sign_pow(static_cast<std::int64_t>(d) - 1);
  for (std::size_t i = 0; i <= d; ++i) {
    r.add(i_term(i), h.h(d - i) - h.h(i),
          sign_pow(static_cast<std::int64_t>(i)) * binomial(static_cast<std::int64_t>(d), static_cast<std::int64_t>(i)) * defect);
  }
  if (table.empty_face() == 1) {
    for (std::size_t i = 0; i <= d; ++i) r.add("palindrome:" + i_term(i), h.h(d - i), h.h(i));
  }
  return r;
}

}  // namespace dskit
