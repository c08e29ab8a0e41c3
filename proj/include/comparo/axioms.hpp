#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "comparo/formula.hpp"
#include "comparo/matching.hpp"
#include "comparo/models.hpp"
#include "comparo/random.hpp"
#include "comparo/semantics.hpp"

namespace comparo {

/// Axiom schemas of the three logics. IL: L1-L4, I1, I2. SP: A0-A4, I1, I2.
/// IP: A1-A3, A4', I1, I2.
struct SchemaId {
  enum class Kind { L1, L2, L3, L4, I1, I2, A0, A1, A2, A3, A4, A4Prime };

  Kind kind;
  std::size_t n = 0;  // number of premise pairs for A4 / A4'
  std::size_t k = 0;  // copies of the conclusion pair for A4'

  /// Number of component formulas `instantiate` expects. For A4 / A4' the
  /// layout is phi_1..phi_n, psi_1..psi_n, phi', psi'.
  std::size_t arity() const;
  std::string name() const;
};

enum class Logic { IL, SP, IP };

std::string_view to_string(Logic l);

/// The schemas of a logic. A4 / A4' appear once with placeholder n = k = 1.
std::vector<SchemaId> schemas_of(Logic l);

/// The semantics a logic is audited under: function lifting for IL,
/// injection lifting for IP. SP has no preferential semantics here.
Semantics audit_semantics(Logic l);

/// Fills a schema. Throws Error on arity mismatch, n = 0, k = 0 or depth > 0
/// components of A4 / A4', and CapacityError when the equinumerosity part
/// exceeds its cap.
Formula instantiate(const SchemaId& schema, const std::vector<Formula>& components);

/// Every carrier element occurs in as many lhs sets as rhs sets. Throws Error
/// on length mismatch.
bool balanced(const std::vector<StateSet>& lhs, const std::vector<StateSet>& rhs);

struct AxiomInstance {
  SchemaId schema;
  Formula formula;
  /// Premise of an implicational schema; T for the others.
  Formula antecedent = Formula::top();
};

struct Violation {
  SchemaId schema;
  Formula instance;
  std::string state;
  /// Status of every comparison in the instance, with the injection or
  /// function witness when there is one.
  std::string trace;
};

struct AuditReport {
  std::vector<Violation> violations;
  std::size_t instances = 0;
  /// Instances whose antecedent held somewhere, i.e. that tested something.
  std::size_t nonvacuous = 0;
  /// The same two counts restricted to A4/A4' instances.
  std::size_t cancellation = 0;
  std::size_t cancellation_nonvacuous = 0;
};

/// Checks explicit instances at every state of a preferential model.
AuditReport audit_instances(const PreferentialModel& m, Semantics s, const std::vector<AxiomInstance>& instances);

struct AuditOptions {
  std::size_t budget = 24;        // instances sampled per model
  std::size_t max_component = 12; // primitive nodes per component
  std::size_t max_n = 3;
  std::size_t max_k = 3;
  /// Share of A4' instances whose premises are built to make the
  /// equinumerosity premise hold, so the schema is exercised non-vacuously.
  double structured_share = 0.5;
};

/// Samples instances of every schema of the logic and evaluates them under
/// the logic's semantics (or `semantics` when given). Expected empty.
AuditReport audit_soundness(const PreferentialModel& m, Logic logic, Rng& rng, const AuditOptions& options = {},
                            std::optional<Semantics> semantics = std::nullopt);

/// Random instance of a schema over `letters`.
AxiomInstance random_instance(Rng& rng, SchemaId::Kind kind, const std::vector<std::string>& letters,
                              const AuditOptions& options);

/// Instance data for the balanced-sequence injection property: the
/// sequences <E_1..E_n, A x r> and <F_1..F_n, B x r> are balanced and every
/// F_i -> E_i has an inflationary injection.
struct BalancedInstance {
  Preorder order;
  std::vector<StateSet> e, f;
  StateSet a, b;
  std::size_t r = 1;
};

/// Tries to draw a qualifying instance; nullopt when the draw does not meet
/// the premises (callers retry).
std::optional<BalancedInstance> draw_balanced_instance(Rng& rng, std::size_t max_states, std::size_t max_n,
                                                       std::size_t max_r);

/// Whether the conclusion holds: an inflationary injection A -> B.
bool balanced_instance_concludes(const BalancedInstance& inst);

}  // namespace comparo
