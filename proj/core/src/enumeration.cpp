#include "dskit/enumeration.hpp"

#include <string>

namespace dskit {

IntPoly InteriorFVector::tilde() const {
  std::vector<Integer> c(entries.size() + 1);
  for (std::size_t i = 0; i < entries.size(); ++i) c[i + 1] = entries[i];
  return IntPoly(std::move(c));
}

FVector f_vector(const Complex& complex) {
  FVector f;
  f.entries.clear();
  for (const auto& group : complex.faces_by_size()) f.entries.emplace_back(group.size());
  return f;
}

HVector h_vector(const FVector& f) {
  // h_k = sum_{i<=k} f_{i-1} (-1)^(k-i) C(d-i, k-i)
  const std::size_t d = f.d();
  HVector h;
  h.entries.assign(d + 1, 0);
  for (std::size_t i = 0; i <= d; ++i) {
    const Integer& fi = f.entries[i];
    for (std::size_t k = i; k <= d; ++k) {
      h.entries[k] += fi * sign_pow(static_cast<std::int64_t>(k - i)) *
                      binomial(static_cast<std::int64_t>(d - i), static_cast<std::int64_t>(k - i));
    }
  }
  return h;
}

FVector h_to_f(const HVector& h) {
  // f(x) = h(x+1) with reversed coefficient conventions:
  // f_{k-1} = sum_{i<=k} h_i C(d-i, k-i)
  const std::size_t d = h.d();
  FVector f;
  f.entries.assign(d + 1, 0);
  for (std::size_t i = 0; i <= d; ++i) {
    for (std::size_t k = i; k <= d; ++k) {
      f.entries[k] += h.entries[i] * binomial(static_cast<std::int64_t>(d - i), static_cast<std::int64_t>(k - i));
    }
  }
  return f;
}

Integer reduced_euler(const FVector& f) {
  Integer chi = 0;
  for (std::size_t i = 0; i < f.entries.size(); ++i) {
    chi += sign_pow(static_cast<std::int64_t>(i) - 1) * f.entries[i];
  }
  return chi;
}

Integer euler(const FVector& f) { return reduced_euler(f) + 1; }
Integer reduced_euler(const Complex& complex) { return reduced_euler(f_vector(complex)); }
Integer euler(const Complex& complex) { return euler(f_vector(complex)); }

std::int64_t multiplicity(const Complex& complex, const Face& face, MultiplicityMethod method) {
  if (!complex.contains(face)) throw DomainError("multiplicity: face " + describe_face(complex, face) + " is not in the complex");
  const auto d = static_cast<std::int64_t>(complex.d());
  const auto size = static_cast<std::int64_t>(face.size());
  switch (method) {
    case MultiplicityMethod::superset_sum: {
      std::int64_t m = 0;
      for (const auto& g : complex.faces()) {
        if (face.is_subset_of(g)) m += sign_pow(d - static_cast<std::int64_t>(g.size()));
      }
      return m;
    }
    case MultiplicityMethod::link_euler: {
      auto chi = to_int64(reduced_euler(link(complex, face)));
      return sign_pow(d - 1 - size) * chi;
    }
  }
  throw DomainError("unknown multiplicity method");
}

std::int64_t epsilon(const Complex& complex, const Face& face, EpsilonMethod method) {
  const auto d = static_cast<std::int64_t>(complex.d());
  const auto size = static_cast<std::int64_t>(face.size());
  switch (method) {
    case EpsilonMethod::link_euler: {
      if (!complex.contains(face)) throw DomainError("epsilon: face " + describe_face(complex, face) + " is not in the complex");
      return to_int64(reduced_euler(link(complex, face))) - sign_pow(d - 1 - size);
    }
    case EpsilonMethod::multiplicity:
      return sign_pow(d - 1 - size) * (multiplicity(complex, face, MultiplicityMethod::superset_sum) - 1);
  }
  throw DomainError("unknown epsilon method");
}

MultiplicityTable::MultiplicityTable(const Complex& complex)
    : complex_(complex), values_(complex.num_faces(), 0) {
  const auto d = static_cast<std::int64_t>(complex.d());
  for (const auto& g : complex.faces()) {
    const int sign = sign_pow(d - static_cast<std::int64_t>(g.size()));
    g.for_each_subset([&](const Face& f) { values_[*complex_.index_of(f)] += sign; });
  }
}

std::int64_t MultiplicityTable::at(const Face& face) const {
  auto idx = complex_.index_of(face);
  if (!idx) throw DomainError("multiplicity table: face " + describe_face(complex_, face) + " is not in the complex");
  return values_[*idx];
}

std::int64_t MultiplicityTable::epsilon(const Face& face) const {
  auto idx = complex_.index_of(face);
  if (!idx) throw DomainError("epsilon: face " + describe_face(complex_, face) + " is not in the complex");
  return epsilon_at_index(*idx);
}

std::int64_t MultiplicityTable::epsilon_at_index(std::size_t flat) const {
  const auto d = static_cast<std::int64_t>(complex_.d());
  const auto size = static_cast<std::int64_t>(complex_.faces()[flat].size());
  return sign_pow(d - 1 - size) * (values_.at(flat) - 1);
}

std::optional<Face> MultiplicityTable::non_reciprocal_witness() const {
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i] != 0 && values_[i] != 1) return complex_.faces()[i];
  }
  return std::nullopt;
}

std::optional<Face> MultiplicityTable::non_semi_eulerian_witness() const {
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i] != 1) return complex_.faces()[i];
  }
  return std::nullopt;
}

IntPoly MultiplicityTable::weighted_face_polynomial() const {
  std::vector<Integer> c(complex_.d() + 1);
  for (std::size_t i = 0; i < values_.size(); ++i) c[complex_.faces()[i].size()] += values_[i];
  return IntPoly(std::move(c));
}

InteriorFVector interior_f_vector(const MultiplicityTable& table) {
  const auto& complex = table.complex();
  if (auto w = table.non_reciprocal_witness()) {
    throw NotReciprocalError("complex is not reciprocal: face " + describe_face(complex, *w) + " has multiplicity " +
                                 std::to_string(table.at(*w)),
                             complex.labels_of(*w));
  }
  InteriorFVector out;
  out.entries.assign(complex.d(), 0);
  for (std::size_t i = 1; i < complex.faces().size(); ++i) {
    if (table.at_index(i) == 1) out.entries[complex.faces()[i].size() - 1] += 1;
  }
  return out;
}

std::vector<Face> boundary_faces(const MultiplicityTable& table) {
  interior_f_vector(table);  // precondition check
  std::vector<Face> out;
  const auto& faces = table.complex().faces();
  out.push_back(faces.front());
  for (std::size_t i = 1; i < faces.size(); ++i) {
    if (table.at_index(i) == 0) out.push_back(faces[i]);
  }
  return out;
}

FVector boundary_f_vector(const FVector& f, const InteriorFVector& interior) {
  if (interior.d() != f.d()) throw DomainError("boundary_f_vector: dimension mismatch");
  FVector out = f;
  for (std::size_t i = 0; i < interior.entries.size(); ++i) out.entries[i + 1] -= interior.entries[i];
  return out;
}

}  // namespace dskit
