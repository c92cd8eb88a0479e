#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "dskit/integer.hpp"

namespace dskit {

/// Dense univariate polynomial with exact integer coefficients and an
/// explicit degree bound d. coefficient(i) is the coefficient of x^i,
/// 0 <= i <= d. Trailing zeros are allowed, so equality ignores the bound.
class IntPoly {
 public:
  /// The zero polynomial with degree bound 0.
  IntPoly() : coeffs_(1) {}

  /// The zero polynomial with the given degree bound.
  explicit IntPoly(std::size_t degree_bound) : coeffs_(degree_bound + 1) {}

  /// Coefficients in ascending order; an empty vector means the zero polynomial.
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long long> coeffs);

  static IntPoly monomial(std::size_t k, std::size_t degree_bound);
  static IntPoly constant(Integer c);
  /// (x + shift)^n
  static IntPoly binomial_power(std::size_t n, const Integer& shift);

  std::size_t degree_bound() const { return coeffs_.size() - 1; }
  /// Actual degree; -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return degree() < 0; }

  /// Coefficient of x^i; zero beyond the degree bound.
  const Integer& coefficient(std::size_t i) const;
  std::span<const Integer> coefficients() const { return coeffs_; }

  /// Same polynomial with a different degree bound. Shrinking below the
  /// actual degree is a DomainError.
  IntPoly with_degree_bound(std::size_t degree_bound) const;

  Integer evaluate(const Integer& x) const;
  /// p(a*x + b), exact.
  IntPoly compose_affine(const Integer& a, const Integer& b) const;
  /// x^d p(1/x) with d the degree bound (coefficient reversal).
  IntPoly reversed() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const Integer& scalar);

  friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
  friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
  friend IntPoly operator*(IntPoly lhs, const Integer& s) { return lhs *= s; }
  friend IntPoly operator*(const Integer& s, IntPoly rhs) { return rhs *= s; }
  friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
  friend bool operator==(const IntPoly& lhs, const IntPoly& rhs);

  /// Human-readable form, highest degree first, e.g. "3x^4 - 2x^2".
  std::string to_string() const;

 private:
  std::vector<Integer> coeffs_;
};

/// Coordinates in the basis (x+1)^i x^(d-i), 0 <= i <= d.
struct DeltaCoeffs {
  std::vector<Integer> coeffs;

  std::size_t degree_bound() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  friend bool operator==(const DeltaCoeffs&, const DeltaCoeffs&) = default;
};

/// Expands sum_i c_i (x+1)^i x^(d-i) in the monomial basis.
IntPoly delta_expand(const DeltaCoeffs& c);
/// Inverse of delta_expand, coefficientwise via x^k = x^k((x+1) - x)^(d-k).
DeltaCoeffs monomial_to_delta(const IntPoly& p);

// ---------------------------------------------------------------------------
// Multi-indices and multivariate polynomials of bounded multidegree.

using Exponent = std::vector<int>;

/// Componentwise b <= a. Sizes must agree.
bool exponent_leq(const Exponent& b, const Exponent& a);
int exponent_total(const Exponent& b);
Exponent exponent_sub(const Exponent& a, const Exponent& b);
Exponent exponent_add(const Exponent& a, const Exponent& b);
/// prod_i C(a_i, b_i)
Integer multi_binomial(const Exponent& a, const Exponent& b);
/// Visits every b <= a in lexicographic order.
void for_each_exponent_below(const Exponent& a, const std::function<void(const Exponent&)>& visit);
std::size_t exponent_lattice_size(const Exponent& a);
std::string exponent_to_string(const Exponent& b);

/// Sparse multivariate polynomial; every stored exponent b satisfies b <= bound.
/// Terms are kept sorted lexicographically by exponent and zero terms dropped.
class MPoly {
 public:
  explicit MPoly(Exponent bound);

  const Exponent& bound() const { return bound_; }
  std::size_t num_variables() const { return bound_.size(); }
  const std::map<Exponent, Integer>& terms() const { return terms_; }
  Integer coefficient(const Exponent& b) const;
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * x^b. Throws DomainError unless b <= bound.
  void add_term(const Exponent& b, const Integer& c);

  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  MPoly& operator*=(const Integer& scalar);
  friend MPoly operator+(MPoly lhs, const MPoly& rhs) { return lhs += rhs; }
  friend MPoly operator-(MPoly lhs, const MPoly& rhs) { return lhs -= rhs; }
  /// Bound of the product is the sum of the bounds.
  friend MPoly operator*(const MPoly& lhs, const MPoly& rhs);
  friend bool operator==(const MPoly& lhs, const MPoly& rhs);

  /// Substitutes x_i -> x for every i.
  IntPoly specialize() const;

  std::string to_string() const;

 private:
  Exponent bound_;
  std::map<Exponent, Integer> terms_;
};

/// Coordinates in the basis x^b (x+1)^(a-b), b <= a.
struct MDeltaCoeffs {
  Exponent bound;
  std::map<Exponent, Integer> coeffs;
};

/// Expands sum_b c_b x^b (x+1)^(a-b). Keys outside the box are a DomainError.
MPoly mdelta_expand(const MDeltaCoeffs& c);
/// Inverse of mdelta_expand via the multi-binomial change of basis.
MDeltaCoeffs mmonomial_to_delta(const MPoly& p);

}  // namespace dskit
