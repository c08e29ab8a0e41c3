#include "comparo/transform.hpp"

#include <algorithm>

#include "comparo/errors.hpp"

namespace comparo {

namespace {

// Above this many W+ states lemma4 refuses; the measure's denominators
// would make the copy count unusable anyway.
constexpr std::size_t kLemma4MaxPlus = 1000000;

mpz_class common_denominator(const Measure& mu) {
  mpz_class l = 1;
  for (const auto& w : mu) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), w.get_den_mpz_t());
  return l;
}

// Integer weights n_w = mu(w) * L.
std::vector<std::size_t> integer_weights(const Measure& mu, const mpz_class& scale) {
  if (scale > kLemma4MaxPlus) {
    throw CapacityError("integerized measure would need " + scale.get_str() + " states (cap " +
                        std::to_string(kLemma4MaxPlus) + ")");
  }
  std::vector<std::size_t> n;
  n.reserve(mu.size());
  for (const auto& w : mu) {
    mpz_class v = w.get_num() * (scale / w.get_den());
    n.push_back(v.get_ui());
  }
  return n;
}

// States of one integerized layer: (origin, copy number, in W+).
struct LayerState {
  StateIndex origin;
  std::size_t copy;
  bool plus;
};

std::vector<LayerState> integerize(const Measure& mu) {
  const auto n = integer_weights(mu, common_denominator(mu));
  std::vector<LayerState> out;
  for (StateIndex w = 0; w < n.size(); ++w) out.push_back({w, 0, n[w] > 0});
  for (StateIndex w = 0; w < n.size(); ++w)
    for (std::size_t c = 1; c < n[w]; ++c) out.push_back({w, c, true});
  return out;
}

Valuation copy_valuation(const Valuation& source, const std::vector<CopyTag>& tags) {
  Valuation v;
  for (const auto& [atom, set] : source) {
    StateSet s(tags.size());
    for (std::size_t t = 0; t < tags.size(); ++t)
      if (set.contains(tags[t].origin)) s.insert(t);
    v.emplace(atom, std::move(s));
  }
  return v;
}

}  // namespace

std::string render_tag(const std::string& origin_id, const CopyTag& tag) {
  return origin_id + "#" + std::to_string(tag.layer) + "." + std::to_string(tag.index);
}

Lemma4Result lemma4(const MultiMeasureModel& m) {
  if (m.measures().size() != 1) {
    throw ModelError("lemma4 needs exactly one measure, got " + std::to_string(m.measures().size()));
  }
  const Measure& mu = m.measures().front();
  const mpz_class scale = common_denominator(mu);
  const auto n = integer_weights(mu, scale);

  Lemma4Result r;
  r.scale = Rational(scale);
  std::vector<std::string> ids = m.space().ids();
  for (StateIndex w = 0; w < ids.size(); ++w) r.tags.push_back({w, 0, 0});
  for (StateIndex w = 0; w < n.size(); ++w) {
    for (std::size_t c = 1; c < n[w]; ++c) {
      r.tags.push_back({w, 0, c});
      ids.push_back(render_tag(m.space().id(w), r.tags.back()));
    }
  }
  StateSet plus(ids.size());
  for (std::size_t t = 0; t < r.tags.size(); ++t)
    if (n[r.tags[t].origin] > 0) plus.insert(t);
  Valuation v = copy_valuation(m.valuation(), r.tags);
  r.model = DistinguishedStateModel(StateSpace(std::move(ids)), std::move(plus), std::move(v));
  return r;
}

std::size_t lemma5_size(const MultiMeasureModel& m) {
  mpz_class total = 0;
  for (const auto& mu : m.measures()) {
    const mpz_class scale = common_denominator(mu);
    mpz_class layer = scale;  // W+ copies
    for (const auto& w : mu)
      if (sgn(w) == 0) layer += 1;  // zero-weight states stay once
    total += layer * (total + 1);
    if (total > kLemma5MaxOutput) return kLemma5MaxOutput + 1;
  }
  return total.get_ui();
}

Lemma5Result lemma5(const MultiMeasureModel& m) {
  const std::size_t k = m.measures().size();
  if (k == 0) throw ModelError("the set of measures must be nonempty");
  if (k > kLemma5MaxMeasures) {
    throw CapacityError("lemma5 handles at most " + std::to_string(kLemma5MaxMeasures) + " measures, got " +
                        std::to_string(k));
  }
  if (m.space().size() > kLemma5MaxStates) {
    throw CapacityError("lemma5 handles at most " + std::to_string(kLemma5MaxStates) + " states, got " +
                        std::to_string(m.space().size()));
  }
  const std::size_t size = lemma5_size(m);
  if (size > kLemma5MaxOutput) {
    throw CapacityError("lemma5 output would exceed " + std::to_string(kLemma5MaxOutput) + " states");
  }

  Lemma5Result r;
  std::vector<std::string> ids;
  ids.reserve(size);
  r.tags.reserve(size);
  std::vector<bool> in_field;
  in_field.reserve(size);
  for (std::size_t layer = 0; layer < k; ++layer) {
    const auto states = integerize(m.measures()[layer]);
    const std::size_t copies = ids.size() + 1;  // |lower layers| + 1
    r.layers.emplace_back();
    r.layer_plus.emplace_back();
    for (const auto& s : states) {
      for (std::size_t z = 0; z < copies; ++z) {
        CopyTag tag{s.origin, layer, s.copy * copies + z};
        r.layers.back().push_back(ids.size());
        if (s.plus) r.layer_plus.back().push_back(ids.size());
        ids.push_back(render_tag(m.space().id(s.origin), tag));
        r.tags.push_back(tag);
        in_field.push_back(s.plus);
      }
    }
  }

  StateSet field(ids.size());
  for (std::size_t t = 0; t < ids.size(); ++t)
    if (in_field[t]) field.insert(t);

  // A cycle inside each level and one edge down to the next level generate
  // the total preorder where lower layers dominate.
  std::vector<std::pair<StateIndex, StateIndex>> order;
  const std::vector<StateIndex>* previous = nullptr;
  for (const auto& level : r.layer_plus) {
    if (level.empty()) continue;
    for (std::size_t i = 0; i + 1 < level.size(); ++i) order.emplace_back(level[i], level[i + 1]);
    if (level.size() > 1) order.emplace_back(level.back(), level.front());
    if (previous) order.emplace_back(previous->front(), level.front());
    previous = &level;
  }

  Valuation v = copy_valuation(m.valuation(), r.tags);
  r.model = PreferentialModel(StateSpace(std::move(ids)), std::move(field), std::move(order), std::move(v));
  return r;
}

std::vector<std::pair<StateIndex, StateIndex>> origin_map(const std::vector<CopyTag>& tags) {
  std::vector<std::pair<StateIndex, StateIndex>> map;
  map.reserve(tags.size());
  for (std::size_t t = 0; t < tags.size(); ++t) map.emplace_back(tags[t].origin, t);
  return map;
}

EquivalenceReport audit_equivalence(const AnyModel& source, Semantics source_sem, const AnyModel& target,
                                    Semantics target_sem, const std::vector<std::pair<StateIndex, StateIndex>>& state_map,
                                    const std::vector<Formula>& formulas) {
  auto ids = [](const AnyModel& m) -> const StateSpace& {
    return std::visit([](const auto& x) -> const StateSpace& { return x.space(); }, m);
  };
  EquivalenceReport report;
  for (const auto& f : formulas) {
    const StateSet s = satisfying_states(source, source_sem, f);
    const StateSet t = satisfying_states(target, target_sem, f);
    for (auto [a, b] : state_map) {
      ++report.checks;
      if (s.contains(a) != t.contains(b)) {
        report.disagreements.push_back({render(f), ids(source).id(a), ids(target).id(b), s.contains(a), t.contains(b)});
      }
    }
  }
  return report;
}

std::vector<Formula> template_formulas(const std::vector<std::string>& letters, bool nested) {
  const std::size_t k = std::min<std::size_t>(letters.size(), 2);
  const std::size_t rows = std::size_t{1} << k;

  // One formula per truth table: the disjunction of its minterms.
  std::vector<Formula> boolean;
  for (std::size_t table = 0; table < (std::size_t{1} << rows); ++table) {
    if (table == 0) {
      boolean.push_back(Formula::bot());
      continue;
    }
    if (table + 1 == (std::size_t{1} << rows)) {
      boolean.push_back(Formula::top());
      continue;
    }
    std::vector<Formula> minterms;
    for (std::size_t row = 0; row < rows; ++row) {
      if (!((table >> row) & 1u)) continue;
      std::vector<Formula> lits;
      for (std::size_t i = 0; i < k; ++i) {
        Formula a = Formula::atom(letters[i]);
        lits.push_back((row >> i) & 1u ? a : Formula::neg(a));
      }
      minterms.push_back(Formula::conj_all(lits));
    }
    boolean.push_back(Formula::disj_all(minterms));
  }

  std::vector<Formula> out = boolean;
  std::vector<Formula> comparisons;
  for (const auto& a : boolean)
    for (const auto& b : boolean) comparisons.push_back(Formula::geq(a, b));
  out.insert(out.end(), comparisons.begin(), comparisons.end());

  // Boolean mixtures of comparisons with a fixed stride so the suite stays
  // deterministic and moderate.
  const std::size_t c = comparisons.size();
  for (std::size_t i = 0; i < c; i += 7) {
    const Formula& x = comparisons[i];
    const Formula& y = comparisons[(i * 5 + 3) % c];
    out.push_back(Formula::conj(x, Formula::neg(y)));
    if (k > 0) out.push_back(Formula::conj(Formula::atom(letters[0]), Formula::disj(x, y)));
  }

  if (nested) {
    for (std::size_t i = 0; i < c; i += 23) {
      const Formula& x = comparisons[i];
      const Formula& y = comparisons[(i * 3 + 11) % c];
      const Formula& b = boolean[i % boolean.size()];
      out.push_back(Formula::geq(x, y));
      out.push_back(Formula::geq(Formula::conj(x, b), Formula::neg(b)));
      out.push_back(Formula::geq(b, Formula::geq(y, b)));
    }
  }
  return out;
}

}  // namespace comparo
