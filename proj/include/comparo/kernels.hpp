#pragma once

// Batch sweeps behind the fuzzing and acceptance runs. Each kernel has a
// serial reference and an OpenMP version; trial i always draws from
// trial_rng(seed, i), so both produce identical reports for any thread count.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "comparo/axioms.hpp"
#include "comparo/formula.hpp"

namespace comparo {

enum class Execution { Serial, Parallel };

struct SoundnessSweep {
  std::size_t models = 0;
  std::size_t instances = 0;
  std::size_t nonvacuous = 0;
  /// Instances of the cancellation schema, and how many of them had a true
  /// premise somewhere.
  std::size_t cancellation = 0;
  std::size_t cancellation_nonvacuous = 0;
  std::size_t violations = 0;
  /// Lowest-index violating model, rendered.
  std::optional<std::string> first_violation;

  friend bool operator==(const SoundnessSweep&, const SoundnessSweep&) = default;
};

struct SoundnessConfig {
  std::size_t models = 10000;
  std::size_t max_states = 6;
  std::size_t letters = 3;
  AuditOptions audit;
};

SoundnessSweep soundness_sweep(Logic logic, std::uint64_t seed, const SoundnessConfig& config, Execution exec);

struct MatchingSweep {
  std::size_t trials = 0;
  std::size_t injective = 0;  // instances where an injection exists
  /// Verdicts differing from brute force, or returned maps that fail the
  /// injection check.
  std::size_t disagreements = 0;

  friend bool operator==(const MatchingSweep&, const MatchingSweep&) = default;
};

struct MatchingConfig {
  std::size_t trials = 10000;
  std::size_t max_field = 10;
  std::size_t max_b = kBruteForceInjectionCap;
};

MatchingSweep matching_sweep(std::uint64_t seed, const MatchingConfig& config, Execution exec);

struct BalancedSweep {
  std::size_t instances = 0;
  std::size_t draws = 0;
  std::size_t failures = 0;
  std::size_t nontrivial = 0;  // instances with A != B

  friend bool operator==(const BalancedSweep&, const BalancedSweep&) = default;
};

struct BalancedConfig {
  std::size_t instances = 1000;
  std::size_t max_states = 6;
  std::size_t max_n = 3;
  std::size_t max_r = 3;
  /// Draws allowed per instance before giving up on it.
  std::size_t max_draws = 1000;
};

BalancedSweep balanced_sweep(std::uint64_t seed, const BalancedConfig& config, Execution exec);

struct TransformSweep {
  std::size_t models = 0;
  std::size_t checks = 0;
  std::size_t disagreements = 0;
  std::size_t max_states = 0;  // largest constructed model
  std::optional<std::string> first_disagreement;

  friend bool operator==(const TransformSweep&, const TransformSweep&) = default;
};

struct TransformConfig {
  std::size_t models = 200;
  std::size_t max_states = 3;
  std::size_t max_measures = 1;
  unsigned max_den = 4;
  std::size_t letters = 2;
};

/// max_measures == 1 audits lemma4 (cardinality semantics), otherwise
/// lemma5 (injection semantics); both against the multi-measure source.
TransformSweep transform_sweep(std::uint64_t seed, const TransformConfig& config, Execution exec);

/// sat_ip next to the exhaustive preferential search on one formula.
struct OracleCheck {
  bool sat = false;             // sat_ip verdict
  bool preferential = false;    // the search found a model
  bool witness_checked = false; // SAT witness re-evaluated and within bounds
  std::size_t witness_states = 0;
  std::size_t witness_measures = 0;
  std::size_t formula_length = 0;

  /// A preferential model found while sat_ip says UNSAT.
  bool contradiction() const { return preferential && !sat; }
  /// Verdicts coincide (the search found a model iff sat_ip says SAT).
  bool agree() const { return preferential == sat; }
};

OracleCheck oracle_check(const Formula& f);

struct OracleSweep {
  std::size_t formulas = 0;
  std::size_t sat = 0;
  std::size_t preferential = 0;
  std::size_t contradictions = 0;
  /// SAT by sat_ip with no preferential model within the state cap.
  std::size_t uncertified = 0;
  std::size_t witness_failures = 0;
  std::optional<std::string> first_contradiction;

  friend bool operator==(const OracleSweep&, const OracleSweep&) = default;
};

struct OracleConfig {
  std::size_t formulas = 500;
  std::size_t letters = 3;
  std::size_t max_size = 10;
  std::size_t max_depth = 2;
};

OracleSweep oracle_sweep(std::uint64_t seed, const OracleConfig& config, Execution exec);

}  // namespace comparo
