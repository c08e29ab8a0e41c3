#pragma once

// Independent reference implementations used only by the tests.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "comparo/formula.hpp"
#include "comparo/models.hpp"
#include "comparo/simplex.hpp"

namespace oracle {

using comparo::Formula;
using comparo::MultiMeasureModel;
using comparo::Rational;

/// Truth value of a depth-0 formula under an assignment (letters absent
/// from the map are false). Straight recursion, no memo.
bool truth_table_value(const Formula& f, const std::vector<std::pair<std::string, bool>>& assignment);

/// Every assignment of `letters`, in binary order (bit i = letters[i]).
std::vector<std::vector<std::pair<std::string, bool>>> assignments(const std::vector<std::string>& letters);

/// Every probability vector over `states` points whose weights have a
/// common denominator d <= max_den.
std::vector<std::vector<Rational>> small_measures(std::size_t states, unsigned max_den);

/// Calls `visit` on every multi-measure model with 1..max_states states,
/// a nonempty set of measures from small_measures (at most max_measures of
/// them) and every valuation of `letters`.
void for_each_small_multimeasure_model(const std::vector<std::string>& letters, std::size_t max_states,
                                       unsigned max_den, std::size_t max_measures,
                                       const std::function<void(const MultiMeasureModel&)>& visit);

/// Direct unanimity evaluation: recursion over the formula, comparisons
/// summing point weights for each measure separately.
bool naive_multimeasure_eval(const MultiMeasureModel& m, std::size_t state, const Formula& f);

/// Optimum of a small LP by enumerating every basis (choices of active
/// constraints), solving each square system exactly. nullopt when
/// infeasible. Only for bounded problems with a handful of variables.
std::optional<Rational> vertex_optimum(const comparo::LinearProgram& lp);

}  // namespace oracle
