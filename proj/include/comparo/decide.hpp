#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "comparo/formula.hpp"
#include "comparo/models.hpp"
#include "comparo/simplex.hpp"

namespace comparo {

/// Measure feasibility over the valuations of `letters`: one weight per
/// truth assignment, summing to one, with mu(a) >= mu(b) for every
/// non-strict pair and mu(a) > mu(b) for every strict pair.
struct MeasureLP {
  std::vector<std::string> letters;
  std::vector<std::pair<Formula, Formula>> nonstrict;
  std::vector<std::pair<Formula, Formula>> strict;

  std::size_t variable_count() const { return std::size_t{1} << letters.size(); }
};

/// Weights indexed by valuation; bit i of the index is the value of
/// letters[i].
struct ValuationMeasure {
  std::vector<std::string> letters;
  std::vector<Rational> weights;
};

struct MeasureLPOutcome {
  std::optional<ValuationMeasure> measure;
  /// The linear program actually solved (strictness as slack maximization:
  /// maximize t with lhs - rhs - t >= 0 per strict pair).
  LinearProgram program;
  LpResult result;
  std::size_t max_bit_size = 0;
};

inline constexpr std::size_t kLetterCap = 12;

/// Whether a depth-0 formula holds under valuation `bits` of `letters`.
/// Letters outside the list count as false.
bool holds_under(const Formula& f, const std::vector<std::string>& letters, std::size_t bits);

/// Throws CapacityError above the letter cap.
MeasureLPOutcome solve_measure_lp(const MeasureLP& lp);

/// The measure alone, or nullopt when the constraints cannot be met.
std::optional<ValuationMeasure> lp_feasible_strict(const MeasureLP& lp);

struct SatOptions {
  /// Restrict witnesses to one measure: every negated comparison must be
  /// refuted by the same measure.
  bool single_measure = false;
  std::size_t letter_cap = kLetterCap;
};

/// Why one guarded disjunct has no model.
struct DisjunctRefutation {
  std::size_t disjunct = 0;
  std::string formula;
  /// "positives-infeasible" or "strict-unattainable".
  std::string reason;
  /// Index of the negated comparison whose strict LP failed (multi-measure
  /// mode), when relevant.
  std::optional<std::size_t> negation;
  /// The LP and its certificate: Farkas multipliers for infeasibility, or
  /// dual multipliers bounding the slack by zero.
  LinearProgram program;
  std::vector<Rational> certificate;
};

struct SatResult {
  enum class Status { Sat, Unsat };

  Status status = Status::Unsat;
  // SAT
  std::optional<MultiMeasureModel> witness;
  std::string designated_state;
  // UNSAT
  std::vector<DisjunctRefutation> trace;

  std::size_t formula_length = 0;
  std::size_t disjuncts = 0;
  std::size_t max_weight_bits = 0;

  bool sat() const { return status == Status::Sat; }
};

/// Constants of the witness size envelope |W| <= c1 |f|^2, |P| <= c2 |f|.
inline constexpr std::size_t kWitnessStatesFactor = 1;
inline constexpr std::size_t kWitnessMeasuresFactor = 1;

bool within_witness_bounds(const SatResult& r);

/// Satisfiability over multi-measure models. A SAT witness is re-checked by
/// the multi-measure evaluator before it is returned.
SatResult sat_ip(const Formula& f, const SatOptions& options = {});

struct ValidResult {
  bool valid = false;
  /// sat_ip of the negation; carries the countermodel when not valid.
  SatResult negation;
};

ValidResult valid_ip(const Formula& f, const SatOptions& options = {});

/// Human-readable UNSAT trace.
std::string describe_trace(const SatResult& r);
/// Machine-readable UNSAT trace (JSON text).
std::string trace_json(const SatResult& r);

// ---------------------------------------------------------------------------
// Exhaustive preferential search

inline constexpr std::size_t kOracleMaxStates = 4;
inline constexpr std::size_t kOracleMaxAtoms = 3;

struct PreferentialWitness {
  PreferentialModel model;
  std::string state;
};

/// Searches every preferential model with at most `max_states` states (up
/// to isomorphism of the preorder) and every valuation, under injection
/// semantics, for one satisfying f. Throws CapacityError beyond 3 atoms or
/// 4 states.
std::optional<PreferentialWitness> enumerate_sat_preferential(const Formula& f,
                                                              std::size_t max_states = kOracleMaxStates);

/// Representatives of the preorders on {0..k-1} up to relabelling, as
/// generator pair lists (the full relations). k <= 4.
const std::vector<std::vector<std::pair<StateIndex, StateIndex>>>& preorder_shapes(std::size_t k);

}  // namespace comparo
