#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dskit/error.hpp"
#include "dskit/face.hpp"

namespace dskit {

/// Face cap used when none is given: $DSKIT_MAX_FACES if set, else 2^24.
std::size_t default_max_faces();

/// A finite abstract simplicial complex, stored as its full face lattice.
///
/// Vertices carry positive external ids; internally a face is a bit set over
/// positions in the sorted vertex universe. Complexes are immutable and copy
/// in O(1) (the face lattice is shared). A link shares its parent's universe,
/// so faces of the two can be compared directly.
class Complex {
 public:
  /// The complex {empty face}.
  Complex();

  /// Downward closure of the given facets. Sets contained in another listed
  /// set are absorbed. Throws ValidationError for ids <= 0 or repeated ids
  /// within one facet, ResourceLimitError past max_faces.
  static Complex from_facets(const std::vector<std::vector<VertexId>>& facets,
                             std::size_t max_faces = default_max_faces());

  /// Closure of facets given as faces over an existing universe.
  static Complex from_faces(std::shared_ptr<const std::vector<VertexId>> universe,
                            const std::vector<Face>& facets,
                            std::size_t max_faces = default_max_faces());

  /// d = 1 + dim; 0 for {empty face}.
  std::size_t d() const { return data_->by_size.size() - 1; }
  int dimension() const { return static_cast<int>(d()) - 1; }
  std::size_t num_vertices() const { return faces_of_size(1).size(); }
  std::size_t num_faces() const { return data_->flat.size(); }

  /// Faces of cardinality k (0 <= k <= d), sorted lexicographically.
  const std::vector<Face>& faces_of_size(std::size_t k) const;
  const std::vector<std::vector<Face>>& faces_by_size() const { return data_->by_size; }
  /// Every face, grouped by ascending cardinality; flat position = face id.
  const std::vector<Face>& faces() const { return data_->flat; }
  /// Maximal faces, sorted lexicographically by vertex ids.
  const std::vector<Face>& facets() const { return data_->facets; }

  bool contains(const Face& f) const { return data_->index.contains(f); }
  /// Flat position of a face; nullopt if not in the complex.
  std::optional<std::size_t> index_of(const Face& f) const;

  bool is_pure() const;

  const std::vector<VertexId>& universe() const { return *data_->universe; }
  std::shared_ptr<const std::vector<VertexId>> shared_universe() const { return data_->universe; }
  VertexId label(std::size_t index) const { return (*data_->universe)[index]; }
  /// External ids of a face, ascending.
  std::vector<VertexId> labels_of(const Face& f) const;
  /// Face over this complex's universe; DomainError if an id is not in it.
  Face face_from_labels(std::span<const VertexId> ids) const;

  /// Facet lists as external ids, lexicographically sorted.
  std::vector<std::vector<VertexId>> facet_labels() const;

 private:
  struct Data {
    std::shared_ptr<const std::vector<VertexId>> universe;
    std::vector<std::vector<Face>> by_size;
    std::vector<Face> flat;
    std::vector<Face> facets;
    std::unordered_map<Face, std::size_t, FaceHash> index;
  };

  explicit Complex(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// {G : G and F disjoint, G u F in complex}, over the same vertex universe.
/// DomainError if F is not a face.
Complex link(const Complex& complex, const Face& face);

/// "{1,3,4}" in external ids; "{}" for the empty face.
std::string describe_face(const Complex& complex, const Face& face);

/// Faces grouped by dimension; slot 0 holds the empty face (dimension -1).
std::vector<std::vector<Face>> faces_by_dim(const Complex& complex);

/// True if every subset of every listed face is listed.
bool is_downward_closed(const std::vector<Face>& faces);

}  // namespace dskit
