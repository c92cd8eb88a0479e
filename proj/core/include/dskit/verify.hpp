#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dskit/balanced.hpp"
#include "dskit/complex.hpp"
#include "dskit/homology.hpp"
#include "dskit/report.hpp"

namespace dskit {

/// Relation ids understood by run_relation, in the order verify_all runs them.
const std::vector<std::string>& relation_ids();
/// Ids that need a coloring.
bool relation_needs_coloring(const std::string& id);

/// Runs one relation by id. Throws ValidationError for an unknown id or a
/// missing coloring, and PreconditionError when the relation does not apply.
RelationReport run_relation(const std::string& id, const Complex& complex, FieldSpec field,
                            const std::optional<Coloring>& coloring = std::nullopt);

/// One relation's result, or the reason it was not applicable.
struct RelationOutcome {
  std::string relation;
  std::optional<RelationReport> report;
  std::string skipped_reason;
  std::optional<std::vector<VertexId>> witness;

  bool applicable() const { return report.has_value(); }
};

/// Every relation that can be checked: univariate ones always, colored ones
/// when a coloring is given. Inapplicable ones are reported with a reason.
std::vector<RelationOutcome> verify_all(const Complex& complex, FieldSpec field = FieldSpec::rationals(),
                                        const std::optional<Coloring>& coloring = std::nullopt);

/// True when every applicable outcome holds.
bool all_hold(const std::vector<RelationOutcome>& outcomes);

}  // namespace dskit
