#include "dskit/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_set>

namespace dskit {

std::size_t default_max_faces() {
  if (const char* env = std::getenv("DSKIT_MAX_FACES")) {
    try {
      std::size_t pos = 0;
      unsigned long long v = std::stoull(env, &pos);
      if (pos == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw ValidationError(std::string("DSKIT_MAX_FACES is not a positive integer: ") + env);
  }
  return std::size_t{1} << 24;
}

Complex::Complex() {
  auto data = std::make_shared<Data>();
  data->universe = std::make_shared<const std::vector<VertexId>>();
  data->by_size = {{Face{}}};
  data->flat = {Face{}};
  data->facets = {Face{}};
  data->index.emplace(Face{}, 0);
  data_ = std::move(data);
}

Complex Complex::from_facets(const std::vector<std::vector<VertexId>>& facets, std::size_t max_faces) {
  std::vector<VertexId> labels;
  for (const auto& facet : facets) {
    for (VertexId v : facet) {
      if (v <= 0) throw ValidationError("vertex id must be positive, got " + std::to_string(v));
      labels.push_back(v);
    }
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  auto universe = std::make_shared<const std::vector<VertexId>>(std::move(labels));

  std::vector<Face> faces;
  faces.reserve(facets.size());
  for (const auto& facet : facets) {
    std::vector<std::size_t> idx;
    idx.reserve(facet.size());
    for (VertexId v : facet) {
      auto it = std::lower_bound(universe->begin(), universe->end(), v);
      idx.push_back(static_cast<std::size_t>(it - universe->begin()));
    }
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
      throw ValidationError("facet lists a vertex twice");
    }
    faces.push_back(Face::from_indices(idx));
  }
  return from_faces(std::move(universe), faces, max_faces);
}

Complex Complex::from_faces(std::shared_ptr<const std::vector<VertexId>> universe,
                            const std::vector<Face>& facets, std::size_t max_faces) {
  auto data = std::make_shared<Data>();
  data->universe = std::move(universe);

  std::size_t top = 0;
  for (const auto& f : facets) top = std::max(top, f.size());
  std::vector<std::vector<Face>> candidates(top + 1);
  for (const auto& f : facets) candidates[f.size()].push_back(f);

  // Sweep cardinalities downward. A listed set already generated from a
  // larger face is absorbed; the rest are facets.
  std::vector<std::vector<Face>> by_size(top + 1);
  std::unordered_set<Face, FaceHash> level;
  std::unordered_set<Face, FaceHash> next;
  std::vector<Face> maximal;
  std::size_t total = 0;
  for (std::size_t k = top + 1; k-- > 0;) {
    for (const auto& f : candidates[k]) {
      if (level.insert(f).second) maximal.push_back(f);
    }
    total += level.size();
    if (total > max_faces) {
      throw ResourceLimitError("complex exceeds the face cap of " + std::to_string(max_faces) + " faces");
    }
    next.clear();
    for (const auto& f : level) {
      for (std::size_t i : f.indices()) next.insert(f.without(i));
    }
    by_size[k].assign(level.begin(), level.end());
    std::sort(by_size[k].begin(), by_size[k].end(), lex_less);
    std::swap(level, next);
  }
  if (by_size[0].empty()) by_size[0].push_back(Face{});  // no facets at all
  if (maximal.empty()) maximal.push_back(Face{});

  for (const auto& group : by_size) {
    for (const auto& f : group) {
      data->index.emplace(f, data->flat.size());
      data->flat.push_back(f);
    }
  }
  std::sort(maximal.begin(), maximal.end(), lex_less);
  data->facets = std::move(maximal);
  data->by_size = std::move(by_size);
  return Complex(std::move(data));
}

const std::vector<Face>& Complex::faces_of_size(std::size_t k) const {
  static const std::vector<Face> none;
  return k < data_->by_size.size() ? data_->by_size[k] : none;
}

std::optional<std::size_t> Complex::index_of(const Face& f) const {
  auto it = data_->index.find(f);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

bool Complex::is_pure() const {
  return std::all_of(data_->facets.begin(), data_->facets.end(),
                     [&](const Face& f) { return f.size() == d(); });
}

std::vector<VertexId> Complex::labels_of(const Face& f) const {
  std::vector<VertexId> out;
  for (std::size_t i : f.indices()) out.push_back(label(i));
  return out;
}

Face Complex::face_from_labels(std::span<const VertexId> ids) const {
  const auto& u = *data_->universe;
  std::vector<std::size_t> idx;
  for (VertexId v : ids) {
    auto it = std::lower_bound(u.begin(), u.end(), v);
    if (it == u.end() || *it != v) throw DomainError("vertex " + std::to_string(v) + " is not in the complex");
    idx.push_back(static_cast<std::size_t>(it - u.begin()));
  }
  return Face::from_indices(idx);
}

std::vector<std::vector<VertexId>> Complex::facet_labels() const {
  std::vector<std::vector<VertexId>> out;
  for (const auto& f : data_->facets) {
    if (!f.empty()) out.push_back(labels_of(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Complex link(const Complex& complex, const Face& face) {
  if (!complex.contains(face)) throw DomainError("link: face is not in the complex");
  if (face.empty()) return complex;
  std::vector<Face> facets;
  for (const auto& g : complex.facets()) {
    if (face.is_subset_of(g)) facets.push_back(g.minus(face));
  }
  return Complex::from_faces(complex.shared_universe(), facets);
}

std::vector<std::vector<Face>> faces_by_dim(const Complex& complex) { return complex.faces_by_size(); }

bool is_downward_closed(const std::vector<Face>& faces) {
  std::unordered_set<Face, FaceHash> set(faces.begin(), faces.end());
  for (const auto& f : faces) {
    for (std::size_t i : f.indices()) {
      if (!set.contains(f.without(i))) return false;
    }
  }
  return true;
}

}  // namespace dskit

namespace dskit {

std::string describe_face(const Complex& complex, const Face& face) {
  std::string s = "{";
  bool first = true;
  for (VertexId v : complex.labels_of(face)) {
    s += (first ? "" : ",") + std::to_string(v);
    first = false;
  }
  return s + "}";
}

}  // namespace dskit
