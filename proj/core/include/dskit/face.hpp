#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace dskit {

/// A face as a set of 0-based vertex indices into a complex's vertex universe.
///
/// Indices below 64 live in a single inline word; larger universes spill into
/// a heap-allocated tail that never carries trailing zero words, so equal sets
/// always have equal representations.
class Face {
 public:
  Face() = default;

  static Face from_indices(std::span<const std::size_t> indices);
  static Face from_indices(std::initializer_list<std::size_t> indices);

  std::size_t size() const;
  bool empty() const { return low_ == 0 && high_.empty(); }
  int dimension() const { return static_cast<int>(size()) - 1; }

  bool contains(std::size_t index) const;
  bool is_subset_of(const Face& other) const;
  bool intersects(const Face& other) const;

  Face with(std::size_t index) const;
  Face without(std::size_t index) const;
  Face united(const Face& other) const;
  Face minus(const Face& other) const;

  /// Ascending vertex indices.
  std::vector<std::size_t> indices() const;

  /// Visits all 2^|F| subsets, including the empty face and the face itself.
  void for_each_subset(const std::function<void(const Face&)>& visit) const;

  std::size_t hash() const;

  friend bool operator==(const Face&, const Face&) = default;

  /// Lexicographic comparison of the ascending index lists.
  friend bool lex_less(const Face& a, const Face& b);

 private:
  void trim();

  std::uint64_t low_ = 0;
  std::vector<std::uint64_t> high_;
};

bool lex_less(const Face& a, const Face& b);

struct FaceHash {
  std::size_t operator()(const Face& f) const { return f.hash(); }
};

}  // namespace dskit

template <>
struct std::hash<dskit::Face> {
  std::size_t operator()(const dskit::Face& f) const { return f.hash(); }
};
