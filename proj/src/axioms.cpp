#include "comparo/axioms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "comparo/errors.hpp"

namespace comparo {

std::size_t SchemaId::arity() const {
  switch (kind) {
    case Kind::A3:
      return 0;
    case Kind::L1:
    case Kind::A1:
    case Kind::A2:
      return 1;
    case Kind::L2:
    case Kind::I1:
    case Kind::I2:
    case Kind::A0:
      return 2;
    case Kind::L3:
    case Kind::L4:
      return 3;
    case Kind::A4:
    case Kind::A4Prime:
      return 2 * n + 2;
  }
  return 0;
}

std::string SchemaId::name() const {
  static const char* names[] = {"L1", "L2", "L3", "L4", "I1", "I2", "A0", "A1", "A2", "A3", "A4", "A4'"};
  std::string s = names[static_cast<int>(kind)];
  if (kind == Kind::A4) s += "(n=" + std::to_string(n) + ")";
  if (kind == Kind::A4Prime) s += "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
  return s;
}

std::string_view to_string(Logic l) {
  switch (l) {
    case Logic::IL:
      return "IL";
    case Logic::SP:
      return "SP";
    case Logic::IP:
      return "IP";
  }
  return "?";
}

std::vector<SchemaId> schemas_of(Logic l) {
  using K = SchemaId::Kind;
  switch (l) {
    case Logic::IL:
      return {{K::L1}, {K::L2}, {K::L3}, {K::L4}, {K::I1}, {K::I2}};
    case Logic::SP:
      return {{K::A0}, {K::A1}, {K::A2}, {K::A3}, {K::A4, 1, 1}, {K::I1}, {K::I2}};
    case Logic::IP:
      return {{K::A1}, {K::A2}, {K::A3}, {K::A4Prime, 1, 1}, {K::I1}, {K::I2}};
  }
  return {};
}

Semantics audit_semantics(Logic l) {
  if (l == Logic::SP) throw Error("SP has no preferential semantics to audit against");
  return l == Logic::IL ? Semantics::Function : Semantics::Injection;
}

namespace {

using F = Formula;

// (phi_1..phi_n, phi' x k) == (psi_1..psi_n, psi' x k) >= T, then the
// premises, then psi' >= phi'.
std::pair<Formula, Formula> cancellation(const std::vector<Formula>& c, std::size_t n, std::size_t k) {
  std::vector<Formula> lhs(c.begin(), c.begin() + static_cast<long>(n));
  std::vector<Formula> rhs(c.begin() + static_cast<long>(n), c.begin() + static_cast<long>(2 * n));
  const Formula& phi_prime = c[2 * n];
  const Formula& psi_prime = c[2 * n + 1];
  std::vector<Formula> premises;
  for (std::size_t i = 0; i < n; ++i) premises.push_back(F::geq(lhs[i], rhs[i]));
  for (std::size_t j = 0; j < k; ++j) {
    lhs.push_back(phi_prime);
    rhs.push_back(psi_prime);
  }
  premises.push_back(F::geq(build_equinumerosity(lhs, rhs), F::top()));
  Formula antecedent = F::conj_all(premises);
  return {antecedent, F::implies(antecedent, F::geq(psi_prime, phi_prime))};
}

AxiomInstance fill(const SchemaId& s, const std::vector<Formula>& c) {
  using K = SchemaId::Kind;
  if (c.size() != s.arity()) {
    throw Error(s.name() + " takes " + std::to_string(s.arity()) + " components, got " + std::to_string(c.size()));
  }
  auto imp = [&](Formula a, Formula b) { return AxiomInstance{s, F::implies(a, std::move(b)), a}; };
  auto plain = [&](Formula f) { return AxiomInstance{s, std::move(f), F::top()}; };
  switch (s.kind) {
    case K::L1:
    case K::A2:
      return plain(F::geq(c[0], c[0]));
    case K::L2:
      return imp(F::geq(F::bot(), F::conj(c[1], F::neg(c[0]))), F::geq(c[0], c[1]));
    case K::L3:
      return imp(F::conj(F::geq(c[0], c[1]), F::geq(c[1], c[2])), F::geq(c[0], c[2]));
    case K::L4:
      return imp(F::conj(F::geq(c[0], c[1]), F::geq(c[0], c[2])), F::geq(c[0], F::disj(c[1], c[2])));
    case K::I1:
      return imp(F::geq(c[0], c[1]), F::geq(F::geq(c[0], c[1]), F::top()));
    case K::I2: {
      Formula n = F::neg(F::geq(c[0], c[1]));
      return imp(n, F::geq(n, F::top()));
    }
    case K::A0:
      return plain(F::disj(F::geq(c[0], c[1]), F::geq(c[1], c[0])));
    case K::A1:
      return plain(F::geq(c[0], F::bot()));
    case K::A3:
      return plain(F::neg(F::geq(F::bot(), F::top())));
    case K::A4:
    case K::A4Prime: {
      if (s.n == 0) throw Error(s.name() + " needs n >= 1");
      if (s.kind == K::A4Prime && s.k == 0) throw Error(s.name() + " needs k >= 1");
      for (const auto& f : c)
        if (modal_depth(f) != 0) throw Error(s.name() + " components must have modal depth 0");
      auto [ante, whole] = cancellation(c, s.n, s.kind == K::A4 ? 1 : s.k);
      return AxiomInstance{s, whole, ante};
    }
  }
  throw Error("unknown schema");
}

std::string describe_comparisons(const PreferentialModel& m, Semantics s, const Formula& f) {
  std::ostringstream os;
  const Preorder& order = *m.preorder();
  for (const Formula& g : comparison_subformulas(f)) {
    if (modal_depth(g) != 1) continue;
    StateSet a = satisfying_states(m, s, g.lhs()) & m.field();
    StateSet b = satisfying_states(m, s, g.rhs()) & m.field();
    os << render(g) << ": ";
    if (s == Semantics::Injection) {
      if (auto inj = exists_inflationary_injection(order, b, a)) {
        os << "holds via {";
        for (std::size_t i = 0; i < inj->size(); ++i)
          os << (i ? ", " : "") << m.space().id((*inj)[i].first) << "->" << m.space().id((*inj)[i].second);
        os << "}";
      } else {
        os << "fails, no inflationary injection";
      }
    } else {
      os << (exists_inflationary_function(order, b, a) ? "holds" : "fails, no inflationary function");
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace

Formula instantiate(const SchemaId& schema, const std::vector<Formula>& components) {
  return fill(schema, components).formula;
}

bool balanced(const std::vector<StateSet>& lhs, const std::vector<StateSet>& rhs) {
  if (lhs.size() != rhs.size()) {
    throw Error("balanced needs sequences of equal length, got " + std::to_string(lhs.size()) + " and " +
                std::to_string(rhs.size()));
  }
  std::size_t carrier = 0;
  for (const auto* seq : {&lhs, &rhs})
    for (const auto& e : *seq) carrier = std::max(carrier, e.size());
  std::vector<long> mult(carrier, 0);
  for (const auto& e : lhs)
    for (auto s : e.members()) ++mult[s];
  for (const auto& e : rhs)
    for (auto s : e.members()) --mult[s];
  return std::all_of(mult.begin(), mult.end(), [](long v) { return v == 0; });
}

AuditReport audit_instances(const PreferentialModel& m, Semantics s, const std::vector<AxiomInstance>& instances) {
  if (s != Semantics::Function && s != Semantics::Injection) {
    throw EvalError("preferential audits run under function or injection semantics");
  }
  if (!m.preorder()) throw EvalError("preferential model has order pairs outside its field");
  AuditReport report;
  for (const auto& inst : instances) {
    ++report.instances;
    StateSet holds = satisfying_states(m, s, inst.formula);
    const bool cancellation = inst.schema.kind == SchemaId::Kind::A4 || inst.schema.kind == SchemaId::Kind::A4Prime;
    report.cancellation += cancellation;
    if (!satisfying_states(m, s, inst.antecedent).empty()) {
      ++report.nonvacuous;
      report.cancellation_nonvacuous += cancellation;
    }
    for (StateIndex w : holds.complement().members()) {
      report.violations.push_back({inst.schema, inst.formula, m.space().id(w), describe_comparisons(m, s, inst.formula)});
    }
  }
  return report;
}

AxiomInstance random_instance(Rng& rng, SchemaId::Kind kind, const std::vector<std::string>& ls,
                              const AuditOptions& options) {
  using K = SchemaId::Kind;
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  auto comp = [&] { return random_depth0(rng, ls, options.max_component); };

  SchemaId schema{kind};
  if (kind == K::A4 || kind == K::A4Prime) {
    schema.n = pick(1, options.max_n);
    schema.k = kind == K::A4 ? 1 : pick(1, options.max_k);
    while (schema.n + schema.k > kMaxEquinumerosityArity) --schema.k;
    const std::size_t n = schema.n, k = schema.k;

    if (std::bernoulli_distribution(options.structured_share)(rng)) {
      Formula alpha = comp(), beta = comp();
      std::vector<Formula> lhs, rhs;
      Formula phi_prime = alpha, psi_prime = beta;
      if (n >= 2 && k == 1 && std::bernoulli_distribution(0.5)(rng)) {
        // (beta >= gamma), (gamma >= alpha) cancel to beta >= alpha.
        Formula gamma = comp();
        lhs = {beta, gamma};
        rhs = {gamma, alpha};
      } else if (n >= k) {
        // k copies of (beta & ~alpha) >= (alpha & ~beta) give beta >= alpha.
        for (std::size_t i = 0; i < k; ++i) {
          lhs.push_back(F::conj(beta, F::neg(alpha)));
          rhs.push_back(F::conj(alpha, F::neg(beta)));
        }
      } else {
        // Too few premise slots: the conclusion is restated as a premise.
        schema.n = n;
        schema.k = 1;
        lhs.assign(1, beta);
        rhs.assign(1, alpha);
      }
      while (lhs.size() < schema.n) {
        Formula pad = comp();
        lhs.push_back(pad);
        rhs.push_back(pad);
      }
      std::vector<std::size_t> order(lhs.size());
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<Formula> c;
      for (auto i : order) c.push_back(lhs[i]);
      for (auto i : order) c.push_back(rhs[i]);
      c.push_back(phi_prime);
      c.push_back(psi_prime);
      return fill(schema, c);
    }
  }
  std::vector<Formula> c;
  for (std::size_t i = 0; i < schema.arity(); ++i) c.push_back(comp());
  return fill(schema, c);
}

AuditReport audit_soundness(const PreferentialModel& m, Logic logic, Rng& rng, const AuditOptions& options,
                            std::optional<Semantics> semantics) {
  const Semantics s = semantics.value_or(audit_semantics(logic));
  std::vector<std::string> ls;
  for (const auto& [atom, set] : m.valuation()) ls.push_back(atom);
  if (ls.empty()) ls = letters(1);
  const auto schemas = schemas_of(logic);
  std::vector<AxiomInstance> instances;
  for (std::size_t i = 0; i < options.budget; ++i) {
    instances.push_back(random_instance(rng, schemas[i % schemas.size()].kind, ls, options));
  }
  // Components may mention letters the model lacks; those are false
  // everywhere.
  if (std::any_of(instances.begin(), instances.end(), [&](const AxiomInstance& inst) {
        for (const auto& a : atoms(inst.formula))
          if (!m.valuation().count(a)) return true;
        return false;
      })) {
    Valuation v = m.valuation();
    for (const auto& inst : instances)
      for (const auto& a : atoms(inst.formula)) v.try_emplace(a, StateSet(m.space().size()));
    PreferentialModel extended(m.space(), m.field(), m.order(), std::move(v));
    return audit_instances(extended, s, instances);
  }
  return audit_instances(m, s, instances);
}

// ---------------------------------------------------------------------------
// Balanced sequences

std::optional<BalancedInstance> draw_balanced_instance(Rng& rng, std::size_t max_states, std::size_t max_n,
                                                       std::size_t max_r) {
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  auto coin = [&](double p) { return std::bernoulli_distribution(p)(rng); };

  PreferentialModel carrier = random_preferential_model(rng, max_states, {});
  const Preorder& order = *carrier.preorder();
  const StateSet& field = order.field();
  const auto members = field.members();
  const std::size_t universe = field.size();
  const std::size_t n = pick(1, max_n);

  BalancedInstance inst;
  inst.order = order;
  inst.e.assign(n, StateSet(universe));
  inst.f.assign(n, StateSet(universe));
  for (auto& e : inst.e)
    for (auto x : members) e.set(x, coin(0.5));

  if (coin(0.5)) {
    // Build each F_i by moving E_i's points down the order (injectively), then
    // read A and B off the multiplicity difference.
    for (std::size_t i = 0; i < n; ++i) {
      for (auto x : inst.e[i].members()) {
        if (!coin(0.8)) continue;
        std::vector<StateIndex> below;
        for (auto y : members)
          if (order.geq(x, y) && !inst.f[i].contains(y)) below.push_back(y);
        if (!below.empty()) inst.f[i].insert(below[pick(0, below.size() - 1)]);
      }
    }
    std::vector<long> diff(universe, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (auto x : inst.e[i].members()) ++diff[x];
      for (auto x : inst.f[i].members()) --diff[x];
    }
    long r = 0;
    for (long d : diff) {
      if (d == 0) continue;
      if (r == 0) r = std::abs(d);
      if (std::abs(d) != r) return std::nullopt;
    }
    if (r == 0) r = static_cast<long>(pick(1, max_r));
    if (static_cast<std::size_t>(r) > max_r) return std::nullopt;
    inst.r = static_cast<std::size_t>(r);
    inst.a = StateSet(universe);
    inst.b = StateSet(universe);
    for (StateIndex x = 0; x < universe; ++x) {
      if (diff[x] < 0) inst.a.insert(x);
      if (diff[x] > 0) inst.b.insert(x);
    }
  } else {
    // Draw A and B, then fill F to the multiplicities balance demands.
    inst.r = pick(1, max_r);
    inst.a = StateSet(universe);
    inst.b = StateSet(universe);
    for (auto x : members) {
      inst.a.set(x, coin(0.35));
      inst.b.set(x, coin(0.35));
    }
    for (auto x : members) {
      long need = 0;
      for (const auto& e : inst.e) need += e.contains(x);
      need += static_cast<long>(inst.r) * (inst.a.contains(x) - inst.b.contains(x));
      if (need < 0 || need > static_cast<long>(n)) return std::nullopt;
      std::vector<std::size_t> idx(n);
      std::iota(idx.begin(), idx.end(), 0);
      std::shuffle(idx.begin(), idx.end(), rng);
      for (long j = 0; j < need; ++j) inst.f[idx[static_cast<std::size_t>(j)]].insert(x);
    }
  }

  std::vector<StateSet> lhs = inst.e, rhs = inst.f;
  for (std::size_t j = 0; j < inst.r; ++j) {
    lhs.push_back(inst.a);
    rhs.push_back(inst.b);
  }
  if (!balanced(lhs, rhs)) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (!exists_inflationary_injection(order, inst.f[i], inst.e[i])) return std::nullopt;
  return inst;
}

bool balanced_instance_concludes(const BalancedInstance& inst) {
  return exists_inflationary_injection(inst.order, inst.a, inst.b).has_value();
}

}  // namespace comparo
