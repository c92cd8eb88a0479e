#include "dskit/balanced.hpp"

#include <algorithm>
#include <string>

namespace dskit {

namespace {

std::string ids_to_string(const std::vector<VertexId>& ids) {
  std::string s = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(ids[i]);
  return s + "}";
}

RelationReport start(std::string name, const Complex& complex) {
  RelationReport r;
  r.relation = std::move(name);
  r.d = complex.d();
  r.chi_reduced = reduced_euler(complex);
  r.m_empty = sign_pow(static_cast<std::int64_t>(r.d) - 1) * r.chi_reduced;
  return r;
}

std::string b_term(const Exponent& b) { return "b=" + exponent_to_string(b); }

void check_coloring_fits(const Complex& complex, const Coloring& coloring) {
  if (exponent_total(coloring.type()) != static_cast<int>(complex.d())) {
    throw DomainError("coloring type does not match the complex dimension");
  }
}

// Basis x^b (x+1)^(a-b) with the coefficient of b taken from v at key(b).
MDeltaCoeffs delta_coeffs(const FlagVector& v, bool complement) {
  MDeltaCoeffs c{v.type, {}};
  for (const auto& [b, value] : v.values) c.coeffs[complement ? exponent_sub(v.type, b) : b] = value;
  return c;
}

}  // namespace

ColorMap Coloring::as_map() const {
  ColorMap out;
  for (std::size_t i = 0; i < colors_.size(); ++i) out[(*universe_)[i]] = colors_[i];
  return out;
}

bool Coloring::is_completely_balanced() const {
  return std::all_of(type_.begin(), type_.end(), [](int a) { return a <= 1; });
}

Coloring validate_balanced(const Complex& complex, const ColorMap& kappa, std::optional<Exponent> type) {
  std::size_t m = 0;
  if (type) {
    m = type->size();
  } else {
    for (const auto& [v, c] : kappa) m = std::max<std::size_t>(m, c > 0 ? static_cast<std::size_t>(c) : 0);
  }
  std::vector<int> colors(complex.universe().size());
  for (std::size_t i = 0; i < colors.size(); ++i) {
    const VertexId v = complex.label(i);
    auto it = kappa.find(v);
    if (it == kappa.end()) throw ColoringError("vertex " + std::to_string(v) + " has no color", {v});
    if (it->second < 1 || static_cast<std::size_t>(it->second) > m) {
      throw ColoringError("vertex " + std::to_string(v) + " has color " + std::to_string(it->second) +
                              " outside 1.." + std::to_string(m),
                          {v});
    }
    colors[i] = it->second;
  }
  Coloring provisional(complex.shared_universe(), colors, Exponent(m, 0));
  for (const auto& facet : complex.facets()) {
    Exponent b = b_of(facet, provisional);
    if (!type) type = b;
    if (b != *type) {
      auto ids = complex.labels_of(facet);
      throw ColoringError("facet " + ids_to_string(ids) + " has color counts " + exponent_to_string(b) +
                              ", expected " + exponent_to_string(*type),
                          ids);
    }
  }
  if (!type) type = Exponent(m, 0);
  return Coloring(complex.shared_universe(), std::move(colors), *type);
}

Exponent b_of(const Face& face, const Coloring& coloring) {
  Exponent b(coloring.num_colors(), 0);
  for (std::size_t i : face.indices()) b[static_cast<std::size_t>(coloring.color_at(i) - 1)] += 1;
  return b;
}

Exponent b_of(std::span<const VertexId> face, const ColorMap& kappa, std::size_t m) {
  Exponent b(m, 0);
  for (VertexId v : face) {
    auto it = kappa.find(v);
    if (it == kappa.end()) throw ValidationError("vertex " + std::to_string(v) + " has no color");
    if (it->second < 1 || static_cast<std::size_t>(it->second) > m) {
      throw ValidationError("vertex " + std::to_string(v) + " has color outside 1.." + std::to_string(m));
    }
    b[static_cast<std::size_t>(it->second - 1)] += 1;
  }
  return b;
}

const Integer& FlagVector::at(const Exponent& b) const {
  auto it = values.find(b);
  if (it == values.end()) throw DomainError("flag vector has no entry " + exponent_to_string(b));
  return it->second;
}

FlagVector flag_f(const Complex& complex, const Coloring& coloring) {
  check_coloring_fits(complex, coloring);
  FlagVector f{coloring.type(), {}};
  for_each_exponent_below(f.type, [&](const Exponent& b) { f.values[b] = 0; });
  for (const auto& face : complex.faces()) {
    auto it = f.values.find(b_of(face, coloring));
    if (it == f.values.end()) throw DomainError("face color counts exceed the coloring type");
    it->second += 1;
  }
  return f;
}

FlagVector flag_h(const FlagVector& f) {
  FlagVector h{f.type, {}};
  for_each_exponent_below(f.type, [&](const Exponent& b) {
    Integer s = 0;
    for_each_exponent_below(b, [&](const Exponent& c) {
      s += sign_pow(exponent_total(b) - exponent_total(c)) *
           multi_binomial(exponent_sub(f.type, c), exponent_sub(b, c)) * f.at(c);
    });
    h.values[b] = s;
  });
  return h;
}

FlagVector flag_h(const Complex& complex, const Coloring& coloring) { return flag_h(flag_f(complex, coloring)); }

FlagVector flag_h_by_expansion(const Complex& complex, const Coloring& coloring) {
  FlagVector f = flag_f(complex, coloring);
  const Exponent& a = f.type;
  const std::size_t m = a.size();

  // (1 - x_i) as a polynomial in one of the m variables.
  std::vector<MPoly> one_minus;
  for (std::size_t i = 0; i < m; ++i) {
    Exponent unit(m, 0);
    unit[i] = 1;
    MPoly p(unit);
    p.add_term(Exponent(m, 0), 1);
    p.add_term(unit, -1);
    one_minus.push_back(std::move(p));
  }

  MPoly total(a);
  for (const auto& [c, count] : f.values) {
    if (count == 0) continue;
    MPoly term(c);
    term.add_term(c, count);
    for (std::size_t i = 0; i < m; ++i) {
      for (int e = c[i]; e < a[i]; ++e) term = term * one_minus[i];
    }
    total += term;
  }
  FlagVector h{a, {}};
  for_each_exponent_below(a, [&](const Exponent& b) { h.values[b] = total.coefficient(b); });
  return h;
}

MPoly flag_polynomial(const FlagVector& v) {
  MPoly p(v.type);
  for (const auto& [b, value] : v.values) p.add_term(b, value);
  return p;
}

RelationReport verify_flag_fh_tilde(const Complex& complex, const Coloring& coloring) {
  auto r = start("flag-fh-tilde", complex);
  FlagVector f = flag_f(complex, coloring);
  MPoly lhs = mdelta_expand(delta_coeffs(flag_h(f), false));
  r.add_polynomial("", lhs, flag_polynomial(f));
  return r;
}

RelationReport verify_flag_reciprocity(const Complex& complex, const Coloring& coloring) {
  auto r = start("flag-reciprocity", complex);
  FlagVector h = flag_h(complex, coloring);
  MPoly lhs = mdelta_expand(delta_coeffs(h, true));
  MultiplicityTable table(complex);
  MPoly rhs(coloring.type());
  for (std::size_t i = 0; i < complex.num_faces(); ++i) rhs.add_term(b_of(complex.faces()[i], coloring), table.at_index(i));
  r.add_polynomial("", lhs, rhs);

  // Setting every x_i to x must give back the univariate reciprocity.
  IntPoly uni_lhs = delta_expand(DeltaCoeffs{h_vector(f_vector(complex)).entries});
  r.add_polynomial("specialized:", lhs.specialize(), uni_lhs);
  r.add_polynomial("specialized-rhs:", rhs.specialize(), table.weighted_face_polynomial());
  return r;
}

RelationReport verify_balanced_ds(const Complex& complex, const Coloring& coloring) {
  auto r = start("balanced-ds", complex);
  const Exponent& a = coloring.type();
  FlagVector h = flag_h(complex, coloring);
  MultiplicityTable table(complex);

  FlagVector diff{a, {}};
  for (const auto& [b, value] : h.values) diff.values[b] = value - h.at(exponent_sub(a, b));
  MPoly lhs = mdelta_expand(delta_coeffs(diff, false));
  MPoly rhs(a);
  std::vector<Exponent> face_b(complex.num_faces());
  for (std::size_t i = 0; i < complex.num_faces(); ++i) {
    face_b[i] = b_of(complex.faces()[i], coloring);
    rhs.add_term(face_b[i], 1 - table.at_index(i));
  }
  r.add_polynomial("poly:", lhs, rhs);

  const int total_a = exponent_total(a);
  for_each_exponent_below(a, [&](const Exponent& b) {
    const Exponent a_minus_b = exponent_sub(a, b);
    Integer s = 0;
    for (std::size_t i = 0; i < complex.num_faces(); ++i) {
      if (!exponent_leq(face_b[i], b)) continue;
      s += multi_binomial(exponent_sub(a, face_b[i]), a_minus_b) * table.epsilon_at_index(i);
    }
    r.add(b_term(b), diff.at(b), sign_pow(total_a - exponent_total(b)) * s);
  });
  return r;
}

RelationReport verify_balanced_semi_eulerian(const Complex& complex, const Coloring& coloring) {
  MultiplicityTable table(complex);
  if (auto w = table.non_semi_eulerian_witness()) {
    throw PreconditionError("complex is not semi-Eulerian: face " + describe_face(complex, *w) + " has multiplicity " +
                                std::to_string(table.at(*w)),
                            complex.labels_of(*w));
  }
  auto r = start("balanced-semi-eulerian", complex);
  const Exponent& a = coloring.type();
  FlagVector h = flag_h(complex, coloring);
  const Integer defect = r.chi_reduced - sign_pow(static_cast<std::int64_t>(r.d) - 1);
  for_each_exponent_below(a, [&](const Exponent& b) {
    r.add(b_term(b), h.at(exponent_sub(a, b)) - h.at(b), sign_pow(exponent_total(b)) * defect * multi_binomial(a, b));
  });
  if (table.empty_face() == 1) {
    for_each_exponent_below(a, [&](const Exponent& b) {
      r.add("palindrome:" + b_term(b), h.at(exponent_sub(a, b)), h.at(b));
    });
  }
  if (coloring.is_completely_balanced()) {
    for_each_exponent_below(a, [&](const Exponent& b) { r.add("binomial:" + b_term(b), multi_binomial(a, b), 1); });
  }
  return r;
}

RelationReport verify_completely_balanced_ds(const Complex& complex, const Coloring& coloring) {
  if (!coloring.is_completely_balanced()) {
    throw PreconditionError("coloring type " + exponent_to_string(coloring.type()) + " is not completely balanced");
  }
  auto r = start("completely-balanced-ds", complex);
  const Exponent& a = coloring.type();
  FlagVector h = flag_h(complex, coloring);
  MultiplicityTable table(complex);
  std::vector<Exponent> face_b(complex.num_faces());
  for (std::size_t i = 0; i < complex.num_faces(); ++i) face_b[i] = b_of(complex.faces()[i], coloring);
  const int total_a = exponent_total(a);
  for_each_exponent_below(a, [&](const Exponent& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < complex.num_faces(); ++i) {
      if (exponent_leq(face_b[i], b)) s += table.epsilon_at_index(i);
    }
    r.add(b_term(b), h.at(b) - h.at(exponent_sub(a, b)), sign_pow(total_a - exponent_total(b)) * s);
  });
  return r;
}

}  // namespace dskit
