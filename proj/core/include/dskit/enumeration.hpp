#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dskit/complex.hpp"
#include "dskit/integer.hpp"
#include "dskit/poly.hpp"

namespace dskit {

/// (f_{-1}, f_0, ..., f_{d-1}); entries[i] counts faces of cardinality i.
struct FVector {
  std::vector<Integer> entries{1};

  std::size_t d() const { return entries.size() - 1; }
  /// f_i for -1 <= i <= d-1.
  const Integer& f(int i) const { return entries.at(static_cast<std::size_t>(i + 1)); }
  /// sum_i f_{i-1} x^i
  IntPoly tilde() const { return IntPoly(entries); }

  friend bool operator==(const FVector&, const FVector&) = default;
};

/// (h_0, ..., h_d), related to the f-vector by
/// sum h_i x^i = sum f_{i-1} x^i (1-x)^(d-i).
struct HVector {
  std::vector<Integer> entries{1};

  std::size_t d() const { return entries.size() - 1; }
  const Integer& h(std::size_t i) const { return entries.at(i); }
  IntPoly tilde() const { return IntPoly(entries); }

  friend bool operator==(const HVector&, const HVector&) = default;
};

/// (f^int_0, ..., f^int_{d-1}): interior (m_F = 1) non-empty faces by dimension.
struct InteriorFVector {
  std::vector<Integer> entries;

  std::size_t d() const { return entries.size(); }
  const Integer& f(int i) const { return entries.at(static_cast<std::size_t>(i)); }
  /// sum_{i>=1} f^int_{i-1} x^i; no constant term.
  IntPoly tilde() const;

  friend bool operator==(const InteriorFVector&, const InteriorFVector&) = default;
};

FVector f_vector(const Complex& complex);
HVector h_vector(const FVector& f);
FVector h_to_f(const HVector& h);

Integer reduced_euler(const FVector& f);
Integer euler(const FVector& f);
Integer reduced_euler(const Complex& complex);
Integer euler(const Complex& complex);

enum class MultiplicityMethod {
  superset_sum,  ///< sum over faces G containing F of (-1)^(d-|G|)
  link_euler,    ///< (-1)^(d-1-|F|) times the reduced Euler characteristic of the link
};

/// m_F for a single face. DomainError if F is not in the complex.
std::int64_t multiplicity(const Complex& complex, const Face& face, MultiplicityMethod method);

enum class EpsilonMethod {
  link_euler,    ///< chi~(lk F) - (-1)^(d-1-|F|)
  multiplicity,  ///< (-1)^(d-1-|F|) (m_F - 1)
};

std::int64_t epsilon(const Complex& complex, const Face& face, EpsilonMethod method);

/// m_F for every face, including the empty face.
///
/// Built by one sweep: each face G pushes (-1)^(d-|G|) into all of its
/// subsets, O(sum_G 2^|G|). Values are indexed like Complex::faces().
class MultiplicityTable {
 public:
  explicit MultiplicityTable(const Complex& complex);

  const Complex& complex() const { return complex_; }
  std::int64_t at(const Face& face) const;
  std::int64_t at_index(std::size_t flat) const { return values_.at(flat); }
  std::int64_t empty_face() const { return values_.front(); }
  /// eps_F derived from m_F; not stored separately.
  std::int64_t epsilon(const Face& face) const;
  std::int64_t epsilon_at_index(std::size_t flat) const;

  /// A non-empty face with m_F outside {0, 1}, if any.
  std::optional<Face> non_reciprocal_witness() const;
  /// A non-empty face with m_F != 1, if any.
  std::optional<Face> non_semi_eulerian_witness() const;
  bool is_reciprocal() const { return !non_reciprocal_witness().has_value(); }
  bool is_semi_eulerian() const { return !non_semi_eulerian_witness().has_value(); }

  /// sum_F m_F x^|F|
  IntPoly weighted_face_polynomial() const;

 private:
  Complex complex_;
  std::vector<std::int64_t> values_;
};

/// Thrown when an operation needs m_F in {0, 1} for every non-empty face.
class NotReciprocalError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Counts non-empty faces with m_F = 1. Throws NotReciprocalError naming a
/// witness when the complex is not reciprocal.
InteriorFVector interior_f_vector(const MultiplicityTable& table);

/// Multiplicity boundary: the empty face plus every non-empty face with m_F = 0.
/// Requires a reciprocal complex.
std::vector<Face> boundary_faces(const MultiplicityTable& table);

/// f-vector of the boundary (f^boundary_{-1} = 1): f - f^int.
FVector boundary_f_vector(const FVector& f, const InteriorFVector& interior);

}  // namespace dskit
