#include "comparo/models.hpp"

#include <algorithm>
#include <set>

#include "comparo/errors.hpp"

namespace comparo {

// ---------------------------------------------------------------------------
// Preorder

namespace {

// Iterative Tarjan. Components come out sinks first.
std::vector<std::vector<StateIndex>> strongly_connected(const std::vector<StateIndex>& nodes,
                                                        const std::vector<std::vector<StateIndex>>& succ,
                                                        std::size_t universe) {
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(universe, kUnvisited), low(universe, 0);
  std::vector<bool> on_stack(universe, false);
  std::vector<StateIndex> stack;
  std::vector<std::vector<StateIndex>> out;
  std::size_t counter = 0;

  struct Frame {
    StateIndex v;
    std::size_t next;
  };
  for (StateIndex root : nodes) {
    if (index[root] != kUnvisited) continue;
    std::vector<Frame> calls{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!calls.empty()) {
      Frame& f = calls.back();
      if (f.next < succ[f.v].size()) {
        StateIndex w = succ[f.v][f.next++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          calls.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      StateIndex v = f.v;
      if (low[v] == index[v]) {
        std::vector<StateIndex> comp;
        StateIndex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
      calls.pop_back();
      if (!calls.empty()) low[calls.back().v] = std::min(low[calls.back().v], low[v]);
    }
  }
  return out;
}

}  // namespace

Preorder closure(std::size_t universe, const StateSet& field,
                 const std::vector<std::pair<StateIndex, StateIndex>>& generators) {
  if (field.size() != universe) throw ModelError("field is not over the state universe");
  std::vector<std::vector<StateIndex>> succ(universe);
  for (auto [x, y] : generators) {
    if (x >= universe || y >= universe || !field.contains(x) || !field.contains(y)) {
      throw ModelError("order pair (" + std::to_string(x) + "," + std::to_string(y) + ") lies outside the field");
    }
    succ[x].push_back(y);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }

  auto comps = strongly_connected(field.members(), succ, universe);
  // Sources first.
  std::reverse(comps.begin(), comps.end());

  Preorder p;
  p.field_ = field;
  p.class_of_.assign(universe, -1);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (StateIndex x : comps[c]) p.class_of_[x] = static_cast<int>(c);

  const std::size_t nc = comps.size();
  std::vector<std::set<std::size_t>> preds(nc);
  for (StateIndex x = 0; x < universe; ++x) {
    for (StateIndex y : succ[x]) {
      auto cx = static_cast<std::size_t>(p.class_of_[x]);
      auto cy = static_cast<std::size_t>(p.class_of_[y]);
      if (cx != cy) preds[cy].insert(cx);
    }
  }
  p.class_above_.assign(nc, StateSet(nc));
  for (std::size_t c = 0; c < nc; ++c) {
    // Predecessors sit earlier in topological order, so they are complete.
    p.class_above_[c].insert(c);
    for (std::size_t d : preds[c]) p.class_above_[c] |= p.class_above_[d];
  }
  p.class_members_ = std::move(comps);
  return p;
}

std::vector<std::pair<StateIndex, StateIndex>> Preorder::pairs() const {
  std::vector<std::pair<StateIndex, StateIndex>> out;
  auto members = field_.members();
  for (StateIndex x : members)
    for (StateIndex y : members)
      if (geq(x, y)) out.emplace_back(x, y);
  return out;
}

bool Preorder::is_total() const {
  const std::size_t nc = class_count();
  for (std::size_t a = 0; a < nc; ++a)
    for (std::size_t b = a + 1; b < nc; ++b)
      if (!class_above_[a].contains(b) && !class_above_[b].contains(a)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// State spaces and models

StateSpace::StateSpace(std::vector<std::string> ids) : ids_(std::move(ids)) {
  for (StateIndex i = 0; i < ids_.size(); ++i) {
    if (ids_[i].empty()) throw ModelError("empty state identifier");
    if (!index_.emplace(ids_[i], i).second) throw ModelError("duplicate state identifier '" + ids_[i] + "'");
  }
}

std::optional<StateIndex> StateSpace::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

StateIndex StateSpace::index(const std::string& id) const {
  auto i = find(id);
  if (!i) throw EvalError("unknown state '" + id + "'");
  return *i;
}

StateSet StateSpace::make_set(const std::vector<std::string>& ids) const {
  StateSet s(size());
  for (const auto& id : ids) s.insert(index(id));
  return s;
}

PreferentialModel::PreferentialModel(StateSpace space, StateSet field,
                                     std::vector<std::pair<StateIndex, StateIndex>> order, Valuation valuation)
    : space_(std::move(space)), field_(std::move(field)), order_(std::move(order)), valuation_(std::move(valuation)) {
  bool inside = field_.size() == space_.size();
  for (auto [x, y] : order_) inside = inside && field_.contains(x) && field_.contains(y);
  if (inside) preorder_ = std::make_shared<const Preorder>(closure(space_.size(), field_, order_));
}

bool operator==(const PreferentialModel& a, const PreferentialModel& b) {
  return a.space_.ids() == b.space_.ids() && a.field_ == b.field_ && a.order_ == b.order_ &&
         a.valuation_ == b.valuation_;
}

bool operator==(const MultiMeasureModel& a, const MultiMeasureModel& b) {
  return a.space_.ids() == b.space_.ids() && a.measures_ == b.measures_ && a.valuation_ == b.valuation_;
}

bool operator==(const DistinguishedStateModel& a, const DistinguishedStateModel& b) {
  return a.space_.ids() == b.space_.ids() && a.plus_ == b.plus_ && a.valuation_ == b.valuation_;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

void check_valuation(const StateSpace& space, const Valuation& v, ValidationReport& out) {
  if (space.size() == 0) out.push_back("W must be nonempty");
  for (const auto& [atom, set] : v) {
    if (set.size() != space.size()) out.push_back("valuation of " + atom + " is not over W");
  }
}

}  // namespace

ValidationReport validate(const PreferentialModel& m) {
  ValidationReport out;
  check_valuation(m.space(), m.valuation(), out);
  if (m.field().size() != m.space().size()) {
    out.push_back("W_⪰ is not a subset of W");
    return out;
  }
  if (m.field().empty()) out.push_back("W_⪰ must be nonempty");
  for (auto [x, y] : m.order()) {
    if (x >= m.space().size() || y >= m.space().size()) {
      out.push_back("order pair refers to a state outside W");
    } else if (!m.field().contains(x) || !m.field().contains(y)) {
      out.push_back("order pair (" + m.space().id(x) + "," + m.space().id(y) + ") lies outside W_⪰");
    }
  }
  return out;
}

ValidationReport validate(const MultiMeasureModel& m) {
  ValidationReport out;
  check_valuation(m.space(), m.valuation(), out);
  if (m.measures().empty()) out.push_back("the set of measures must be nonempty");
  for (std::size_t i = 0; i < m.measures().size(); ++i) {
    const Measure& mu = m.measures()[i];
    const std::string tag = "measure " + std::to_string(i);
    if (mu.size() != m.space().size()) {
      out.push_back(tag + ": has " + std::to_string(mu.size()) + " weights for " + std::to_string(m.space().size()) +
                    " states");
      continue;
    }
    Rational total = 0;
    for (StateIndex s = 0; s < mu.size(); ++s) {
      if (mu[s] < 0) out.push_back(tag + ": weight of " + m.space().id(s) + " is negative (" + format_rational(mu[s]) + ")");
      total += mu[s];
    }
    if (total != 1) out.push_back(tag + ": weights sum to " + format_rational(total));
  }
  return out;
}

ValidationReport validate(const DistinguishedStateModel& m) {
  ValidationReport out;
  check_valuation(m.space(), m.valuation(), out);
  if (m.plus().size() != m.space().size()) {
    out.push_back("W₊ is not a subset of W");
  } else if (m.plus().empty()) {
    out.push_back("W₊ must be nonempty");
  }
  return out;
}

ValidationReport validate(const AnyModel& m) {
  return std::visit([](const auto& x) { return validate(x); }, m);
}

ValidationReport check_preorder(const StateSpace& space, const StateSet& field,
                                const std::vector<std::pair<StateIndex, StateIndex>>& relation) {
  ValidationReport out;
  const std::size_t n = space.size();
  std::vector<StateSet> rel(n, StateSet(n));
  for (auto [x, y] : relation) {
    if (!field.contains(x) || !field.contains(y)) {
      out.push_back("pair (" + space.id(x) + "," + space.id(y) + ") lies outside the field");
      continue;
    }
    rel[x].insert(y);
  }
  for (StateIndex x : field.members()) {
    if (!rel[x].contains(x)) out.push_back("reflexivity fails at (" + space.id(x) + "," + space.id(x) + ")");
  }
  for (StateIndex a : field.members()) {
    for (StateIndex b : rel[a].members()) {
      for (StateIndex c : rel[b].members()) {
        if (!rel[a].contains(c)) {
          out.push_back("transitivity fails at (" + space.id(a) + "," + space.id(b) + "),(" + space.id(b) + "," +
                        space.id(c) + ")");
        }
      }
    }
  }
  return out;
}

Rational measure_of(const Measure& mu, const StateSet& event) {
  if (event.size() != mu.size()) throw EvalError("event is not over the measure's states");
  Rational total = 0;
  for (StateIndex s : event.members()) total += mu[s];
  return total;
}

}  // namespace comparo
