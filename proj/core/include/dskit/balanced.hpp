#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "dskit/complex.hpp"
#include "dskit/enumeration.hpp"
#include "dskit/poly.hpp"
#include "dskit/report.hpp"

namespace dskit {

/// Vertex id -> color in 1..m, as read from a .colors file.
using ColorMap = std::map<VertexId, int>;

/// A coloring that failed the balanced check; carries the offending facet
/// (or vertex) as external ids.
class ColoringError : public ValidationError {
 public:
  ColoringError(const std::string& message, std::vector<VertexId> witness)
      : ValidationError(message), witness_(std::move(witness)) {}
  const std::vector<VertexId>& witness() const { return witness_; }

 private:
  std::vector<VertexId> witness_;
};

/// A validated balanced coloring: every facet has exactly a_i vertices of color i.
class Coloring {
 public:
  Coloring(std::shared_ptr<const std::vector<VertexId>> universe, std::vector<int> colors, Exponent type)
      : universe_(std::move(universe)), colors_(std::move(colors)), type_(std::move(type)) {}

  /// The type vector a; |a| = d.
  const Exponent& type() const { return type_; }
  std::size_t num_colors() const { return type_.size(); }
  /// Color of the vertex at a universe position.
  int color_at(std::size_t index) const { return colors_.at(index); }
  ColorMap as_map() const;
  /// Every a_i <= 1, so all multi-binomials C(a-c, b-c) are 1.
  bool is_completely_balanced() const;

 private:
  std::shared_ptr<const std::vector<VertexId>> universe_;
  std::vector<int> colors_;
  Exponent type_;
};

/// Checks that kappa colors every vertex with a positive color and that every
/// facet has the same color counts. The type is inferred from the first facet
/// unless given. ColoringError names the first violating facet or vertex.
Coloring validate_balanced(const Complex& complex, const ColorMap& kappa,
                           std::optional<Exponent> type = std::nullopt);

/// b(F): number of vertices of F of each color.
Exponent b_of(const Face& face, const Coloring& coloring);
/// Same from external ids; ValidationError for an uncolored vertex or a color above m.
Exponent b_of(std::span<const VertexId> face, const ColorMap& kappa, std::size_t m);

/// Values indexed by b <= a.
struct FlagVector {
  Exponent type;
  std::map<Exponent, Integer> values;

  const Integer& at(const Exponent& b) const;
  friend bool operator==(const FlagVector&, const FlagVector&) = default;
};

/// f_b = number of faces with b(F) = b.
FlagVector flag_f(const Complex& complex, const Coloring& coloring);
/// h_b = sum_{c <= b} (-1)^(|b|-|c|) C(a-c, b-c) f_c.
FlagVector flag_h(const Complex& complex, const Coloring& coloring);
FlagVector flag_h(const FlagVector& f);
/// h_b read off the expanded polynomial sum_F x^b(F) (1-x)^(a-b(F)).
FlagVector flag_h_by_expansion(const Complex& complex, const Coloring& coloring);

/// sum_b v_b x^b with bound a.
MPoly flag_polynomial(const FlagVector& v);

/// (x+1)^a h~(x/(x+1)) == f~(x)
RelationReport verify_flag_fh_tilde(const Complex& complex, const Coloring& coloring);

/// x^a h~((x+1)/x) == sum_F m_F x^b(F); also compares the x_i -> x
/// specialization of both sides with the univariate reciprocity polynomials.
RelationReport verify_flag_reciprocity(const Complex& complex, const Coloring& coloring);

/// sum_b (h_b - h_{a-b}) x^b (x+1)^(a-b) == sum_F (1 - m_F) x^b(F), and for every
/// b <= a: h_b - h_{a-b} = (-1)^(|a|-|b|) sum_{F: b(F) <= b} C(a-b(F), a-b) eps_F.
RelationReport verify_balanced_ds(const Complex& complex, const Coloring& coloring);

/// h_{a-b} - h_b = (-1)^|b| (chi~ - (-1)^(d-1)) C(a,b). Adds palindrome terms when
/// Eulerian. PreconditionError unless semi-Eulerian.
RelationReport verify_balanced_semi_eulerian(const Complex& complex, const Coloring& coloring);

/// The a = (1,...,1) form: h_b - h_{a-b} = (-1)^(|a|-|b|) sum_{F: b(F) <= b} eps_F.
/// PreconditionError unless completely balanced.
RelationReport verify_completely_balanced_ds(const Complex& complex, const Coloring& coloring);

}  // namespace dskit
