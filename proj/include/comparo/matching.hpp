#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "comparo/models.hpp"

namespace comparo {

/// Pairs (b, f(b)) sorted by b.
using Injection = std::vector<std::pair<StateIndex, StateIndex>>;

enum class MatchingEngine {
  Auto,         // element graph when small, class flow otherwise
  HopcroftKarp, // augmenting paths over edges {(b, a) : a >= b}
  ClassFlow,    // max flow between equivalence classes, expanded afterwards
};

/// An injective f: B -> A with f(x) >= x for all x in B, if one exists.
/// Throws EvalError when A or B leaves the field.
std::optional<Injection> exists_inflationary_injection(const Preorder& order, const StateSet& b, const StateSet& a,
                                                       MatchingEngine engine = MatchingEngine::Auto);

/// Every b in B has some a in A with a >= b.
bool exists_inflationary_function(const Preorder& order, const StateSet& b, const StateSet& a);

/// Maximum matching size of the dominance graph, element level.
std::size_t hopcroft_karp_matching(const Preorder& order, const std::vector<StateIndex>& left,
                                   const std::vector<StateIndex>& right, std::vector<long>& match_left);

inline constexpr std::size_t kBruteForceInjectionCap = 8;

/// Exhaustive search over injective assignments; testing oracle for the
/// matching engine. Throws CapacityError when |B| exceeds the cap.
std::optional<Injection> brute_force_injection(const Preorder& order, const StateSet& b, const StateSet& a);

/// True iff `f` is an injection from B into A with f(x) >= x.
bool is_inflationary_injection(const Preorder& order, const StateSet& b, const StateSet& a, const Injection& f);

}  // namespace comparo
