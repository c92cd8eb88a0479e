#pragma once

#include <optional>

#include "dskit/complex.hpp"
#include "dskit/enumeration.hpp"
#include "dskit/homology.hpp"
#include "dskit/report.hpp"

namespace dskit {

/// Multiplicity-based classes of a complex, plus the homological one.
struct Classification {
  bool reciprocal = false;
  bool semi_eulerian = false;
  bool eulerian = false;
  std::optional<bool> homology_manifold;  ///< unset when not computed
  FieldSpec field = FieldSpec::rationals();

  std::optional<Face> reciprocal_witness;     ///< non-empty face with m_F not in {0,1}
  std::optional<Face> semi_eulerian_witness;  ///< non-empty face with m_F != 1
  std::optional<Face> eulerian_witness;       ///< the empty face when m_empty != 1
  std::optional<Face> manifold_witness;
  std::optional<BettiTable> manifold_witness_betti;
};

Classification classify(const Complex& complex, FieldSpec field = FieldSpec::rationals(),
                        bool check_manifold = true);

/// Face numbers of a reciprocal complex: everything the f-version relations need.
struct ReciprocalFaceNumbers {
  FVector f;
  InteriorFVector interior;
  Integer chi_reduced;

  std::size_t d() const { return f.d(); }
  /// (-1)^(d-1) chi~
  Integer m_empty() const;
};

/// Throws NotReciprocalError with a witness face.
ReciprocalFaceNumbers reciprocal_face_numbers(const MultiplicityTable& table);

/// (x+1)^d h~(x/(x+1)) == f~(x); holds for every complex.
RelationReport verify_fh_tilde(const Complex& complex);

/// x^d h~((x+1)/x) == sum_F m_F x^|F|; holds for every complex.
RelationReport verify_reciprocity(const Complex& complex);

/// f_{k-1} = sum_{i>=k} (-1)^(d-i) C(i,k) f^int_{i-1} for k >= 1, the k = 0
/// relation with m_empty, chi(D) = (-1)^(d-1) chi(D^int), and the polynomial
/// form (-1)^d f~(x) = f~int(-x-1) + m_empty.
RelationReport verify_ds_f(const ReciprocalFaceNumbers& numbers);
/// Same on a complex; NotReciprocalError if it is not reciprocal.
RelationReport verify_ds_f(const Complex& complex);

/// f^int_{k-1} = sum_{i>=k} (-1)^(d-i) C(i,k) f_{i-1}, k >= 1, and the polynomial
/// form (-1)^d f~int(x) = f~(-x-1) - (-1)^d m_empty.
RelationReport verify_ds_f_inverse(const ReciprocalFaceNumbers& numbers);
RelationReport verify_ds_f_inverse(const Complex& complex);

/// sum (h_i - h_{d-i})(x+1)^i x^(d-i) == sum_F (m_F - 1) x^|F| and
/// h_{d-i} - h_i = (-1)^i sum_F C(d-|F|, i) eps_F. Holds for every complex.
RelationReport verify_ds_h(const Complex& complex);

/// h_{d-i} - h_i = (-1)^i C(d,i) (chi~ - (-1)^(d-1)); palindrome terms are added
/// when the complex is Eulerian. PreconditionError unless semi-Eulerian.
RelationReport verify_semi_eulerian_h(const Complex& complex);

}  // namespace dskit
