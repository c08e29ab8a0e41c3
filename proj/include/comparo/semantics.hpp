#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "comparo/formula.hpp"
#include "comparo/matching.hpp"
#include "comparo/models.hpp"

namespace comparo {

/// Satisfaction relations for comparisons:
///  - Function: every B state has a dominating A state (lifting by
///    inflationary functions), preferential models.
///  - Injection: an inflationary injection B -> A exists, preferential models.
///  - MultiMeasure: every measure gives A at least the mass of B.
///  - Cardinality: |A n W+| >= |B n W+|, distinguished-state models.
enum class Semantics { Function, Injection, MultiMeasure, Cardinality };

std::string_view to_string(Semantics s);
/// Accepts "function", "injection", "multimeasure", "cardinality".
std::optional<Semantics> parse_semantics(std::string_view s);

/// Whether the semantics applies to the model's type.
bool compatible(const AnyModel& m, Semantics s);

/// Truth set of a formula restricted to the carrier the semantics compares
/// events on: the field for preferential models, W for multi-measure models,
/// W+ for distinguished-state models.
struct TruthSet {
  Formula formula;
  StateSet states;
};

/// States of W satisfying f. Throws EvalError on unknown atoms or a
/// model/semantics mismatch.
StateSet satisfying_states(const AnyModel& m, Semantics s, const Formula& f);
StateSet satisfying_states(const PreferentialModel& m, Semantics s, const Formula& f);
StateSet satisfying_states(const MultiMeasureModel& m, const Formula& f);
StateSet satisfying_states(const DistinguishedStateModel& m, const Formula& f);

TruthSet bracket(const AnyModel& m, Semantics s, const Formula& f);

bool eval(const AnyModel& m, Semantics s, StateIndex state, const Formula& f);
bool eval(const AnyModel& m, Semantics s, const std::string& state, const Formula& f);

/// Why a comparison lhs >= rhs holds in a preferential model under
/// injection semantics: the inflationary injection [[rhs]] -> [[lhs]].
std::optional<Injection> comparison_witness(const PreferentialModel& m, const Formula& lhs, const Formula& rhs);

/// Comparison subformulas of f in first-occurrence order, deduplicated.
std::vector<Formula> comparison_subformulas(const Formula& f);

}  // namespace comparo
