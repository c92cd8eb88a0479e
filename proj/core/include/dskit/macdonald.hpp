#pragma once

#include <optional>

#include "dskit/enumeration.hpp"
#include "dskit/homology.hpp"
#include "dskit/report.hpp"

namespace dskit {

// Macdonald's polynomial relation for manifolds with boundary. Q(x) carries a
// factor 1/2, so everything here works with 2Q(x), which has integer
// coefficients, and every residual is scaled by 2.

/// P(D, x) = 1 - f_0 x + f_1 x^2 - ... + (-1)^d f_{d-1} x^d
IntPoly macdonald_p(const FVector& f);

/// 2Q(x) = 2 P(D, x) - P(boundary, x)
IntPoly macdonald_q_doubled(const FVector& f, const FVector& boundary);

/// (-1)^d 2Q(-x) == 2Q(1+x) + 2 cte, with cte = 0 when d-1 is odd and chi~
/// when d-1 is even.
RelationReport verify_macdonald(const FVector& f, const FVector& boundary, const Integer& chi_reduced);

/// On a complex: the boundary is the multiplicity boundary (NotReciprocalError
/// otherwise), or the homological boundary when a field is given
/// (PreconditionError unless a homology manifold).
RelationReport verify_macdonald(const Complex& complex, std::optional<FieldSpec> homological = std::nullopt);

}  // namespace dskit
