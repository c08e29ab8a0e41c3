#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "comparo/formula.hpp"
#include "comparo/models.hpp"
#include "comparo/semantics.hpp"

namespace comparo {

/// Where a constructed state comes from: a source state, the measure layer
/// it was built for, and its copy number within that layer.
struct CopyTag {
  StateIndex origin = 0;
  std::size_t layer = 0;
  std::size_t index = 0;
};

/// "origin#layer.index"
std::string render_tag(const std::string& origin_id, const CopyTag& tag);

struct Lemma4Result {
  DistinguishedStateModel model;
  /// One tag per target state. Source states keep their identifiers and
  /// indices; fresh copies follow them.
  std::vector<CopyTag> tags;
  /// Common denominator the measure was scaled by; equals |W+|.
  Rational scale;
};

/// Integerizes a single measure: a state of weight n/L (L the common
/// denominator) becomes n states of W+, itself included. Zero-weight
/// states stay in W outside W+. Throws ModelError unless |P| = 1.
Lemma4Result lemma4(const MultiMeasureModel& m);

inline constexpr std::size_t kLemma5MaxMeasures = 3;
inline constexpr std::size_t kLemma5MaxStates = 4;
inline constexpr std::size_t kLemma5MaxOutput = 100000;

struct Lemma5Result {
  PreferentialModel model;
  std::vector<CopyTag> tags;
  /// Target states per layer, in layer order.
  std::vector<std::vector<StateIndex>> layers;
  /// Field members per layer.
  std::vector<std::vector<StateIndex>> layer_plus;
};

/// Multi-measure model to preferential model with a total preorder: one
/// integerized layer per measure, layer n+1 copied (|lower layers| + 1)
/// times, lower layers dominating. Throws CapacityError beyond 3 measures,
/// 4 states or 10^5 output states.
Lemma5Result lemma5(const MultiMeasureModel& m);

/// Closed-form output size of lemma5 without building it.
std::size_t lemma5_size(const MultiMeasureModel& m);

struct Disagreement {
  std::string formula;
  std::string source_state;
  std::string target_state;
  bool source_value = false;
  bool target_value = false;
};

struct EquivalenceReport {
  std::size_t checks = 0;
  std::vector<Disagreement> disagreements;

  bool ok() const { return disagreements.empty(); }
};

/// Evaluates each formula at every mapped (source, target) state pair.
EquivalenceReport audit_equivalence(const AnyModel& source, Semantics source_sem, const AnyModel& target,
                                    Semantics target_sem, const std::vector<std::pair<StateIndex, StateIndex>>& state_map,
                                    const std::vector<Formula>& formulas);

/// Pairs each target state with the source state it copies.
std::vector<std::pair<StateIndex, StateIndex>> origin_map(const std::vector<CopyTag>& tags);

/// The audit suite over the given letters (at most two are used for the
/// Boolean part): one representative of every Boolean function, every
/// comparison between two of them, negated and conjoined comparisons, and
/// a few nested ones.
std::vector<Formula> template_formulas(const std::vector<std::string>& letters, bool nested = true);

}  // namespace comparo
