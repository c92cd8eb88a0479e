#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dskit/integer.hpp"
#include "dskit/poly.hpp"

namespace dskit {

/// One compared coefficient or scalar relation: lhs - rhs must vanish.
struct Residual {
  std::string term;  ///< e.g. "x^3", "k=1", "b=(1,0,1)", "chi"
  Integer lhs;
  Integer rhs;

  Integer difference() const { return lhs - rhs; }
  friend bool operator==(const Residual&, const Residual&) = default;
};

/// Outcome of checking one identity on one complex. The verdict is derived
/// from the residuals, so holds() is true exactly when all of them vanish.
struct RelationReport {
  std::string relation;
  std::vector<Residual> residuals;
  std::size_t d = 0;
  Integer chi_reduced = 0;
  Integer m_empty = 0;
  /// Monomial coefficients of both sides, when the relation is a single
  /// univariate polynomial identity.
  std::optional<IntPoly> lhs_poly;
  std::optional<IntPoly> rhs_poly;

  bool holds() const;
  /// Terms with non-zero residual.
  std::vector<std::string> failing_terms() const;
  /// The residual for a named term; nullptr if absent.
  const Residual* find(const std::string& term) const;

  void add(std::string term, Integer lhs, Integer rhs);
  /// Adds one residual per coefficient x^k of lhs - rhs.
  void add_polynomial(const std::string& prefix, const IntPoly& lhs, const IntPoly& rhs);
  void add_polynomial(const std::string& prefix, const MPoly& lhs, const MPoly& rhs);

  friend bool operator==(const RelationReport&, const RelationReport&) = default;
};

}  // namespace dskit
