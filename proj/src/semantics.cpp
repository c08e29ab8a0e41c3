#include "comparo/semantics.hpp"

#include <set>
#include <unordered_map>

#include "comparo/errors.hpp"

namespace comparo {

std::string_view to_string(Semantics s) {
  switch (s) {
    case Semantics::Function:
      return "function";
    case Semantics::Injection:
      return "injection";
    case Semantics::MultiMeasure:
      return "multimeasure";
    case Semantics::Cardinality:
      return "cardinality";
  }
  return "?";
}

std::optional<Semantics> parse_semantics(std::string_view s) {
  for (auto t : {Semantics::Function, Semantics::Injection, Semantics::MultiMeasure, Semantics::Cardinality})
    if (to_string(t) == s) return t;
  return std::nullopt;
}

bool compatible(const AnyModel& m, Semantics s) {
  switch (s) {
    case Semantics::Function:
    case Semantics::Injection:
      return std::holds_alternative<PreferentialModel>(m);
    case Semantics::MultiMeasure:
      return std::holds_alternative<MultiMeasureModel>(m);
    case Semantics::Cardinality:
      return std::holds_alternative<DistinguishedStateModel>(m);
  }
  return false;
}

namespace {

// Computes truth sets over W bottom-up. Comparison truth is delegated to
// `Compare`, which receives both operands' truth sets over W and decides
// the lifting; the result is W or the empty set.
template <class Compare>
class Evaluator {
 public:
  Evaluator(const StateSpace& space, const Valuation& valuation, Compare compare)
      : space_(space), valuation_(valuation), compare_(std::move(compare)) {}

  const StateSet& truth(const Formula& f) {
    if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second;
    StateSet r = compute(f);
    return memo_.emplace(f.id(), std::move(r)).first->second;
  }

 private:
  StateSet compute(const Formula& f) {
    const std::size_t n = space_.size();
    switch (f.kind()) {
      case Formula::Kind::Atom: {
        auto it = valuation_.find(f.name());
        if (it == valuation_.end()) throw EvalError("unknown atom '" + f.name() + "'");
        return it->second;
      }
      case Formula::Kind::Top:
        return StateSet::full(n);
      case Formula::Kind::Bot:
        return StateSet(n);
      case Formula::Kind::Not:
        return truth(f.lhs()).complement();
      case Formula::Kind::And:
        return truth(f.lhs()) & truth(f.rhs());
      case Formula::Kind::Geq: {
        StateSet a = truth(f.lhs());
        const StateSet& b = truth(f.rhs());
        return StateSet(n, compare_(a, b));
      }
    }
    return StateSet(n);
  }

  const StateSpace& space_;
  const Valuation& valuation_;
  Compare compare_;
  std::unordered_map<const void*, StateSet> memo_{64};
};

template <class Compare>
StateSet run(const StateSpace& space, const Valuation& v, const Formula& f, Compare c) {
  Evaluator<Compare> e(space, v, std::move(c));
  return e.truth(f);
}

const Preorder& require_preorder(const PreferentialModel& m) {
  if (!m.preorder()) throw EvalError("preferential model has order pairs outside its field");
  return *m.preorder();
}

}  // namespace

StateSet satisfying_states(const PreferentialModel& m, Semantics s, const Formula& f) {
  const Preorder& order = require_preorder(m);
  const StateSet& field = m.field();
  if (s == Semantics::Injection) {
    return run(m.space(), m.valuation(), f, [&](const StateSet& a, const StateSet& b) {
      return exists_inflationary_injection(order, b & field, a & field).has_value();
    });
  }
  if (s == Semantics::Function) {
    return run(m.space(), m.valuation(), f, [&](const StateSet& a, const StateSet& b) {
      return exists_inflationary_function(order, b & field, a & field);
    });
  }
  throw EvalError(std::string(to_string(s)) + " semantics does not apply to preferential models");
}

StateSet satisfying_states(const MultiMeasureModel& m, const Formula& f) {
  return run(m.space(), m.valuation(), f, [&](const StateSet& a, const StateSet& b) {
    for (const auto& mu : m.measures())
      if (measure_of(mu, a) < measure_of(mu, b)) return false;
    return true;
  });
}

StateSet satisfying_states(const DistinguishedStateModel& m, const Formula& f) {
  const StateSet& plus = m.plus();
  return run(m.space(), m.valuation(), f,
             [&](const StateSet& a, const StateSet& b) { return (a & plus).count() >= (b & plus).count(); });
}

StateSet satisfying_states(const AnyModel& m, Semantics s, const Formula& f) {
  if (!compatible(m, s)) {
    throw EvalError(std::string(to_string(s)) + " semantics does not apply to " +
                    (m.index() == 0 ? "preferential" : m.index() == 1 ? "multi-measure" : "distinguished-state") +
                    " models");
  }
  switch (m.index()) {
    case 0:
      return satisfying_states(std::get<PreferentialModel>(m), s, f);
    case 1:
      return satisfying_states(std::get<MultiMeasureModel>(m), f);
    default:
      return satisfying_states(std::get<DistinguishedStateModel>(m), f);
  }
}

TruthSet bracket(const AnyModel& m, Semantics s, const Formula& f) {
  StateSet all = satisfying_states(m, s, f);
  if (const auto* p = std::get_if<PreferentialModel>(&m)) all &= p->field();
  if (const auto* d = std::get_if<DistinguishedStateModel>(&m)) all &= d->plus();
  return {f, std::move(all)};
}

bool eval(const AnyModel& m, Semantics s, StateIndex state, const Formula& f) {
  StateSet t = satisfying_states(m, s, f);
  if (state >= t.size()) throw EvalError("state index out of range");
  return t.contains(state);
}

bool eval(const AnyModel& m, Semantics s, const std::string& state, const Formula& f) {
  const StateSpace& space = std::visit([](const auto& x) -> const StateSpace& { return x.space(); }, m);
  return eval(m, s, space.index(state), f);
}

std::optional<Injection> comparison_witness(const PreferentialModel& m, const Formula& lhs, const Formula& rhs) {
  const Preorder& order = require_preorder(m);
  StateSet a = satisfying_states(m, Semantics::Injection, lhs) & m.field();
  StateSet b = satisfying_states(m, Semantics::Injection, rhs) & m.field();
  return exists_inflationary_injection(order, b, a);
}

namespace {

void collect_comparisons(const Formula& f, std::vector<Formula>& out, std::set<Formula>& seen) {
  switch (f.kind()) {
    case Formula::Kind::Not:
      collect_comparisons(f.lhs(), out, seen);
      break;
    case Formula::Kind::And:
      collect_comparisons(f.lhs(), out, seen);
      collect_comparisons(f.rhs(), out, seen);
      break;
    case Formula::Kind::Geq:
      if (seen.insert(f).second) out.push_back(f);
      collect_comparisons(f.lhs(), out, seen);
      collect_comparisons(f.rhs(), out, seen);
      break;
    default:
      break;
  }
}

}  // namespace

std::vector<Formula> comparison_subformulas(const Formula& f) {
  std::vector<Formula> out;
  std::set<Formula> seen;
  collect_comparisons(f, out, seen);
  return out;
}

}  // namespace comparo
