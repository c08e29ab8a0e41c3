#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "comparo/formula.hpp"
#include "comparo/models.hpp"

namespace comparo {

using Rng = std::mt19937_64;

/// Independent stream for trial `index` of a run seeded with `seed`, so a
/// sweep gives the same trials whatever the thread count.
Rng trial_rng(std::uint64_t seed, std::uint64_t index);

/// Random formula of modal depth 0 with at most `max_size` primitive nodes.
Formula random_depth0(Rng& rng, const std::vector<std::string>& letters, std::size_t max_size);

/// Random formula with at most `max_size` primitive nodes and modal depth at
/// most `max_depth`. Derived connectives appear through their expansions.
Formula random_formula(Rng& rng, const std::vector<std::string>& letters, std::size_t max_size, std::size_t max_depth);

/// Random preorder on a random nonempty field: strict edges of a random DAG,
/// or (with probability `total_bias`) a random level assignment giving a
/// total preorder. Generators are returned in the model; the closure is the
/// model's preorder.
PreferentialModel random_preferential_model(Rng& rng, std::size_t max_states, const std::vector<std::string>& letters,
                                            double total_bias = 0.3);

/// Random multi-measure model whose weights have denominators at most
/// `max_den`. Every measure sums to one.
MultiMeasureModel random_multimeasure_model(Rng& rng, std::size_t max_states, std::size_t max_measures,
                                            const std::vector<std::string>& letters, unsigned max_den);

/// Random measure over `states` points with denominators at most `max_den`.
Measure random_measure(Rng& rng, std::size_t states, unsigned max_den);

/// Letters p, q, r, s, ... (first `n`).
std::vector<std::string> letters(std::size_t n);

}  // namespace comparo
