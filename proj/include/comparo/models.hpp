#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "comparo/rational.hpp"
#include "comparo/state_set.hpp"

namespace comparo {

using StateIndex = std::size_t;
using Valuation = std::map<std::string, StateSet>;

/// Reflexive-transitive closure of a generator relation over a field of
/// states, stored in condensed form: each field state belongs to one
/// equivalence class, and dominance is a reachability matrix over classes.
/// This keeps large total preorders (thousands of states, a handful of
/// levels) cheap.
class Preorder {
 public:
  Preorder() = default;

  std::size_t universe() const { return class_of_.size(); }
  const StateSet& field() const { return field_; }
  bool in_field(StateIndex x) const { return field_.contains(x); }

  /// x dominates y (x >= y). False unless both are in the field.
  bool geq(StateIndex x, StateIndex y) const {
    int cx = class_of_[x], cy = class_of_[y];
    return cx >= 0 && cy >= 0 && class_above_[static_cast<std::size_t>(cy)].contains(static_cast<std::size_t>(cx));
  }

  std::size_t class_count() const { return class_members_.size(); }
  /// Class index of a field state, -1 outside the field.
  int class_of(StateIndex x) const { return class_of_[x]; }
  const std::vector<StateIndex>& class_members(std::size_t c) const { return class_members_[c]; }
  /// Classes that dominate class c, c included.
  const StateSet& classes_above(std::size_t c) const { return class_above_[c]; }

  /// Every pair x >= y, in lexicographic order. Quadratic; meant for small
  /// fields and tests.
  std::vector<std::pair<StateIndex, StateIndex>> pairs() const;

  bool is_total() const;

  friend bool operator==(const Preorder& a, const Preorder& b) { return a.pairs() == b.pairs(); }

 private:
  friend Preorder closure(std::size_t universe, const StateSet& field,
                          const std::vector<std::pair<StateIndex, StateIndex>>& generators);

  StateSet field_;
  std::vector<int> class_of_;
  std::vector<std::vector<StateIndex>> class_members_;
  std::vector<StateSet> class_above_;
};

/// Smallest preorder on `field` containing the generator pairs (x, y),
/// read as x >= y. Throws ModelError for a pair outside the field.
Preorder closure(std::size_t universe, const StateSet& field,
                 const std::vector<std::pair<StateIndex, StateIndex>>& generators);

/// States and valuation shared by every model type.
class StateSpace {
 public:
  StateSpace() = default;
  /// Throws ModelError on duplicate or empty identifiers.
  explicit StateSpace(std::vector<std::string> ids);

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(StateIndex i) const { return ids_[i]; }
  std::optional<StateIndex> find(const std::string& id) const;
  /// Like find, but throws EvalError for unknown identifiers.
  StateIndex index(const std::string& id) const;

  StateSet make_set(const std::vector<std::string>& ids) const;

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, StateIndex> index_;
};

/// W with a preorder on the nonempty field W_>= and a valuation.
class PreferentialModel {
 public:
  PreferentialModel() = default;
  /// Keeps the data as given. The closure is computed here when every
  /// generator lies inside the field; `validate` reports anything else.
  PreferentialModel(StateSpace space, StateSet field, std::vector<std::pair<StateIndex, StateIndex>> order,
                    Valuation valuation);
  /// Reuses a closure the caller already computed for exactly these
  /// generators over this field.
  PreferentialModel(StateSpace space, StateSet field, std::vector<std::pair<StateIndex, StateIndex>> order,
                    Valuation valuation, std::shared_ptr<const Preorder> preorder)
      : space_(std::move(space)),
        field_(std::move(field)),
        order_(std::move(order)),
        valuation_(std::move(valuation)),
        preorder_(std::move(preorder)) {}

  const StateSpace& space() const { return space_; }
  const StateSet& field() const { return field_; }
  const std::vector<std::pair<StateIndex, StateIndex>>& order() const { return order_; }
  const Valuation& valuation() const { return valuation_; }
  /// Null when the generators are not inside the field.
  const Preorder* preorder() const { return preorder_.get(); }

  friend bool operator==(const PreferentialModel& a, const PreferentialModel& b);

 private:
  StateSpace space_;
  StateSet field_;
  std::vector<std::pair<StateIndex, StateIndex>> order_;
  Valuation valuation_;
  std::shared_ptr<const Preorder> preorder_;
};

/// Point weights of one measure, indexed by state.
using Measure = std::vector<Rational>;

/// W with a nonempty finite set of probability measures and a valuation.
class MultiMeasureModel {
 public:
  MultiMeasureModel() = default;
  MultiMeasureModel(StateSpace space, std::vector<Measure> measures, Valuation valuation)
      : space_(std::move(space)), measures_(std::move(measures)), valuation_(std::move(valuation)) {}

  const StateSpace& space() const { return space_; }
  const std::vector<Measure>& measures() const { return measures_; }
  const Valuation& valuation() const { return valuation_; }

  friend bool operator==(const MultiMeasureModel& a, const MultiMeasureModel& b);

 private:
  StateSpace space_;
  std::vector<Measure> measures_;
  Valuation valuation_;
};

/// W with a nonempty distinguished subset W+ counted by the cardinality
/// semantics.
class DistinguishedStateModel {
 public:
  DistinguishedStateModel() = default;
  DistinguishedStateModel(StateSpace space, StateSet plus, Valuation valuation)
      : space_(std::move(space)), plus_(std::move(plus)), valuation_(std::move(valuation)) {}

  const StateSpace& space() const { return space_; }
  const StateSet& plus() const { return plus_; }
  const Valuation& valuation() const { return valuation_; }

  friend bool operator==(const DistinguishedStateModel& a, const DistinguishedStateModel& b);

 private:
  StateSpace space_;
  StateSet plus_;
  Valuation valuation_;
};

using AnyModel = std::variant<PreferentialModel, MultiMeasureModel, DistinguishedStateModel>;

/// Invariant violations, one message each; empty means valid.
using ValidationReport = std::vector<std::string>;

ValidationReport validate(const PreferentialModel& m);
ValidationReport validate(const MultiMeasureModel& m);
ValidationReport validate(const DistinguishedStateModel& m);
ValidationReport validate(const AnyModel& m);

/// Reflexivity and transitivity check of an explicit relation over `field`.
/// Reports e.g. "transitivity fails at (a,b),(b,c)".
ValidationReport check_preorder(const StateSpace& space, const StateSet& field,
                                const std::vector<std::pair<StateIndex, StateIndex>>& relation);

/// Sum of point weights over the event. Throws EvalError when the event is
/// not over the measure's state space.
Rational measure_of(const Measure& mu, const StateSet& event);

}  // namespace comparo
