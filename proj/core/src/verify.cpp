#include "dskit/verify.hpp"

#include <algorithm>

#include "dskit/macdonald.hpp"
#include "dskit/relations.hpp"
#include "dskit/stanley_reisner.hpp"

namespace dskit {

const std::vector<std::string>& relation_ids() {
  static const std::vector<std::string> ids = {
      "fh-tilde",        "reciprocity",          "ds-f",          "ds-f-inverse",
      "ds-h",            "semi-eulerian-h",      "macdonald",     "hilbert-series",
      "sr-reciprocity",  "flag-fh-tilde",        "flag-reciprocity", "balanced-ds",
      "balanced-semi-eulerian", "completely-balanced-ds", "colored-hilbert-series", "sr-reciprocity-colored"};
  return ids;
}

bool relation_needs_coloring(const std::string& id) {
  return id.starts_with("flag-") || id.starts_with("balanced-") || id.starts_with("completely-") ||
         id.starts_with("colored-") || id == "sr-reciprocity-colored";
}

RelationReport run_relation(const std::string& id, const Complex& complex, FieldSpec field,
                            const std::optional<Coloring>& coloring) {
  if (relation_needs_coloring(id) && !coloring) throw ValidationError("relation '" + id + "' needs a coloring");
  if (id == "fh-tilde") return verify_fh_tilde(complex);
  if (id == "reciprocity") return verify_reciprocity(complex);
  if (id == "ds-f") return verify_ds_f(complex);
  if (id == "ds-f-inverse") return verify_ds_f_inverse(complex);
  if (id == "ds-h") return verify_ds_h(complex);
  if (id == "semi-eulerian-h") return verify_semi_eulerian_h(complex);
  if (id == "macdonald") {
    // Homology manifolds use their homological boundary; anything else
    // reciprocal falls back to the multiplicity split.
    if (is_homology_manifold(complex, field).is_manifold) return verify_macdonald(complex, field);
    return verify_macdonald(complex);
  }
  if (id == "hilbert-series") return verify_hilbert_series(complex);
  if (id == "sr-reciprocity") return verify_sr_reciprocity(complex);
  if (id == "flag-fh-tilde") return verify_flag_fh_tilde(complex, *coloring);
  if (id == "flag-reciprocity") return verify_flag_reciprocity(complex, *coloring);
  if (id == "balanced-ds") return verify_balanced_ds(complex, *coloring);
  if (id == "balanced-semi-eulerian") return verify_balanced_semi_eulerian(complex, *coloring);
  if (id == "completely-balanced-ds") return verify_completely_balanced_ds(complex, *coloring);
  if (id == "colored-hilbert-series") return verify_hilbert_series(complex, *coloring);
  if (id == "sr-reciprocity-colored") return verify_sr_reciprocity_colored(complex, *coloring);
  throw ValidationError("unknown relation '" + id + "'");
}

std::vector<RelationOutcome> verify_all(const Complex& complex, FieldSpec field, const std::optional<Coloring>& coloring) {
  std::vector<RelationOutcome> out;
  for (const auto& id : relation_ids()) {
    if (relation_needs_coloring(id) && !coloring) continue;
    RelationOutcome o;
    o.relation = id;
    try {
      o.report = run_relation(id, complex, field, coloring);
    } catch (const PreconditionError& e) {
      o.skipped_reason = e.what();
      o.witness = e.witness();
    }
    out.push_back(std::move(o));
  }
  return out;
}

bool all_hold(const std::vector<RelationOutcome>& outcomes) {
  return std::all_of(outcomes.begin(), outcomes.end(),
                     [](const RelationOutcome& o) { return !o.applicable() || o.report->holds(); });
}

}  // namespace dskit
