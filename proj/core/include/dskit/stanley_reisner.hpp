#pragma once

#include "dskit/balanced.hpp"
#include "dskit/complex.hpp"
#include "dskit/poly.hpp"
#include "dskit/report.hpp"

namespace dskit {

// Hilbert series of the Stanley-Reisner ring, kept as numerator over a
// symbolic power of (1 - lambda). Denominators are never expanded; identities
// are compared after clearing them.

/// numerator / (1 - lambda)^denominator_exponent
struct HilbertSeries {
  IntPoly numerator;
  std::size_t denominator_exponent = 0;
};

/// numerator / prod_i (1 - w_i)^denominator_exponents[i]
struct ColoredHilbertSeries {
  MPoly numerator{Exponent{}};
  Exponent denominator_exponents;
};

/// h~(lambda) / (1 - lambda)^d
HilbertSeries hilbert_series(const Complex& complex);
/// flag h~(w) / (1 - w)^a
ColoredHilbertSeries hilbert_series(const Complex& complex, const Coloring& coloring);

/// Clears the denominator: h~(lambda) == sum_F lambda^|F| (1-lambda)^(d-|F|).
RelationReport verify_hilbert_series(const Complex& complex);
RelationReport verify_hilbert_series(const Complex& complex, const Coloring& coloring);

/// Evaluates (-1)^d F((x+1)/x) from the series by generic substitution and
/// compares it with the reciprocity polynomial sum h_i (x+1)^i x^(d-i)
/// ("direct:" terms) and with sum_F m_F x^|F| ("faces:" terms).
RelationReport verify_sr_reciprocity(const Complex& complex);

/// Colored analogue: (-1)^d F((x+1)/x) against the flag reciprocity polynomial
/// and sum_F m_F x^b(F).
RelationReport verify_sr_reciprocity_colored(const Complex& complex, const Coloring& coloring);

}  // namespace dskit
