#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dskit/complex.hpp"
#include "dskit/integer.hpp"

namespace dskit {

/// Coefficient field for homology: the rationals or GF(p).
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }
  /// ValidationError unless p is prime.
  static FieldSpec prime(std::uint32_t p);
  /// "q"/"Q" for the rationals, otherwise a prime.
  static FieldSpec parse(const std::string& text);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string to_string() const { return is_rational() ? "q" : std::to_string(p_); }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// Reduced Betti numbers, index i = -1 .. top.
struct BettiTable {
  std::vector<std::size_t> values;  // values[0] is beta~_{-1}

  int top_index() const { return static_cast<int>(values.size()) - 2; }
  /// beta~_i; zero outside the stored range.
  std::size_t operator()(int i) const;
  /// sum_i (-1)^i beta~_i
  Integer euler_characteristic() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Rank of the boundary map from faces of cardinality k to faces of cardinality k-1
/// (k >= 1; k = 1 is the augmentation onto the empty face).
std::size_t boundary_rank(const Complex& complex, std::size_t k, FieldSpec field);

/// Reduced simplicial homology of the augmented chain complex.
BettiTable reduced_betti(const Complex& complex, FieldSpec field = FieldSpec::rationals());

/// Memoized homology of links, keyed by face.
class LinkHomology {
 public:
  LinkHomology(Complex complex, FieldSpec field) : complex_(std::move(complex)), field_(field) {}

  const BettiTable& at(const Face& face);
  const Complex& complex() const { return complex_; }
  FieldSpec field() const { return field_; }

  /// Link has the homology of a sphere or ball of dimension d-1-|F|.
  bool is_sphere_or_ball(const Face& face);
  /// beta~_{d-1-|F|}(lk F) == 1. Only meaningful if is_sphere_or_ball.
  bool is_sphere(const Face& face);

 private:
  Complex complex_;
  FieldSpec field_;
  std::unordered_map<Face, BettiTable, FaceHash> cache_;
};

struct ManifoldVerdict {
  bool is_manifold = true;
  std::optional<Face> witness;
  std::optional<BettiTable> witness_betti;
};

/// Every non-empty face's link has the field homology of a sphere or ball of
/// complementary dimension. On failure names the first failing face
/// (by cardinality, then lexicographically).
ManifoldVerdict is_homology_manifold(const Complex& complex, FieldSpec field = FieldSpec::rationals());

/// Empty face plus every non-empty face whose link has ball homology.
/// Throws PreconditionError (with witness) if the complex is not a homology manifold.
std::vector<Face> boundary_faces_homological(const Complex& complex, FieldSpec field = FieldSpec::rationals());

}  // namespace dskit
