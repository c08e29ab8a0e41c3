#include "comparo/kernels.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "comparo/decide.hpp"
#include "comparo/matching.hpp"
#include "comparo/semantics.hpp"
#include "comparo/model_io.hpp"
#include "comparo/random.hpp"
#include "comparo/transform.hpp"

namespace comparo {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Keeps the message of the lowest trial index that reported one, so the
// parallel result matches the serial one.
struct FirstByIndex {
  std::size_t index = kNone;
  std::string message;

  void offer(std::size_t i, std::string msg) {
#pragma omp critical(comparo_first_by_index)
    {
      if (i < index) {
        index = i;
        message = std::move(msg);
      }
    }
  }
  std::optional<std::string> get() const {
    return index == kNone ? std::nullopt : std::optional<std::string>(message);
  }
};

struct SoundnessTrial {
  AuditReport report;
  std::string model;
};

SoundnessTrial soundness_trial(Logic logic, std::uint64_t seed, std::size_t i, const SoundnessConfig& config) {
  Rng rng = trial_rng(seed, i);
  PreferentialModel m = random_preferential_model(rng, config.max_states, letters(config.letters));
  SoundnessTrial t{audit_soundness(m, logic, rng, config.audit), {}};
  if (!t.report.violations.empty()) t.model = dump_model(AnyModel(m));
  return t;
}

std::string describe(std::size_t i, const SoundnessTrial& t) {
  const Violation& v = t.report.violations.front();
  std::ostringstream os;
  os << "model #" << i << ": " << v.schema.name() << " instance " << render(v.instance) << " fails at " << v.state
     << "\n" << v.trace << t.model;
  return os.str();
}

void add(SoundnessSweep& s, const AuditReport& r) {
  s.models += 1;
  s.instances += r.instances;
  s.nonvacuous += r.nonvacuous;
  s.cancellation += r.cancellation;
  s.cancellation_nonvacuous += r.cancellation_nonvacuous;
  s.violations += r.violations.size();
}

struct MatchingTrial {
  bool injective = false;
  bool disagree = false;
};

MatchingTrial matching_trial(std::uint64_t seed, std::size_t i, const MatchingConfig& config) {
  Rng rng = trial_rng(seed, i);
  PreferentialModel carrier = random_preferential_model(rng, config.max_field, {});
  const Preorder& order = *carrier.preorder();
  const auto members = order.field().members();
  std::bernoulli_distribution coin(0.5);
  StateSet a(order.universe()), b(order.universe());
  for (auto x : members) {
    a.set(x, coin(rng));
    if (b.count() < config.max_b) b.set(x, coin(rng));
  }

  const auto brute = brute_force_injection(order, b, a);
  MatchingTrial t;
  t.injective = brute.has_value();
  if (brute && !is_inflationary_injection(order, b, a, *brute)) t.disagree = true;
  for (auto engine : {MatchingEngine::HopcroftKarp, MatchingEngine::ClassFlow}) {
    const auto got = exists_inflationary_injection(order, b, a, engine);
    if (got.has_value() != t.injective) t.disagree = true;
    if (got && !is_inflationary_injection(order, b, a, *got)) t.disagree = true;
  }
  return t;
}

struct BalancedTrial {
  bool found = false;
  std::size_t draws = 0;
  bool concludes = true;
  bool nontrivial = false;
};

BalancedTrial balanced_trial(std::uint64_t seed, std::size_t i, const BalancedConfig& config) {
  Rng rng = trial_rng(seed, i);
  BalancedTrial t;
  while (t.draws < config.max_draws) {
    ++t.draws;
    auto inst = draw_balanced_instance(rng, config.max_states, config.max_n, config.max_r);
    if (!inst) continue;
    t.found = true;
    t.concludes = balanced_instance_concludes(*inst);
    t.nontrivial = !(inst->a == inst->b);
    break;
  }
  return t;
}

struct TransformTrial {
  EquivalenceReport report;
  std::size_t states = 0;
};

TransformTrial transform_trial(std::uint64_t seed, std::size_t i, const TransformConfig& config) {
  Rng rng = trial_rng(seed, i);
  const auto ls = letters(config.letters);
  MultiMeasureModel m = random_multimeasure_model(rng, config.max_states, config.max_measures, ls, config.max_den);
  const auto templates = template_formulas(ls);
  TransformTrial t;
  if (m.measures().size() == 1 && config.max_measures == 1) {
    auto r = lemma4(m);
    t.states = r.model.space().size();
    t.report = audit_equivalence(AnyModel(m), Semantics::MultiMeasure, AnyModel(r.model), Semantics::Cardinality,
                                 origin_map(r.tags), templates);
  } else {
    auto r = lemma5(m);
    t.states = r.model.space().size();
    t.report = audit_equivalence(AnyModel(m), Semantics::MultiMeasure, AnyModel(r.model), Semantics::Injection,
                                 origin_map(r.tags), templates);
  }
  return t;
}

}  // namespace

SoundnessSweep soundness_sweep(Logic logic, std::uint64_t seed, const SoundnessConfig& config, Execution exec) {
  SoundnessSweep total;
  FirstByIndex first;
  const long n = static_cast<long>(config.models);
  if (exec == Execution::Serial) {
    for (long i = 0; i < n; ++i) {
      auto t = soundness_trial(logic, seed, static_cast<std::size_t>(i), config);
      add(total, t.report);
      if (!t.report.violations.empty()) first.offer(static_cast<std::size_t>(i), describe(static_cast<std::size_t>(i), t));
    }
  } else {
#pragma omp parallel
    {
      SoundnessSweep local;
#pragma omp for schedule(dynamic, 16) nowait
      for (long i = 0; i < n; ++i) {
        auto t = soundness_trial(logic, seed, static_cast<std::size_t>(i), config);
        add(local, t.report);
        if (!t.report.violations.empty()) first.offer(static_cast<std::size_t>(i), describe(static_cast<std::size_t>(i), t));
      }
#pragma omp critical(comparo_soundness_merge)
      {
        total.models += local.models;
        total.instances += local.instances;
        total.nonvacuous += local.nonvacuous;
        total.cancellation += local.cancellation;
        total.cancellation_nonvacuous += local.cancellation_nonvacuous;
        total.violations += local.violations;
      }
    }
  }
  total.first_violation = first.get();
  return total;
}

MatchingSweep matching_sweep(std::uint64_t seed, const MatchingConfig& config, Execution exec) {
  std::size_t injective = 0, disagreements = 0;
  const long n = static_cast<long>(config.trials);
  if (exec == Execution::Serial) {
    for (long i = 0; i < n; ++i) {
      auto t = matching_trial(seed, static_cast<std::size_t>(i), config);
      injective += t.injective;
      disagreements += t.disagree;
    }
  } else {
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : injective, disagreements)
    for (long i = 0; i < n; ++i) {
      auto t = matching_trial(seed, static_cast<std::size_t>(i), config);
      injective += t.injective;
      disagreements += t.disagree;
    }
  }
  return {config.trials, injective, disagreements};
}

BalancedSweep balanced_sweep(std::uint64_t seed, const BalancedConfig& config, Execution exec) {
  std::size_t instances = 0, draws = 0, failures = 0, nontrivial = 0;
  const long n = static_cast<long>(config.instances);
  auto run = [&](long i, std::size_t& in, std::size_t& dr, std::size_t& fa, std::size_t& nt) {
    auto t = balanced_trial(seed, static_cast<std::size_t>(i), config);
    in += t.found;
    dr += t.draws;
    fa += t.found && !t.concludes;
    nt += t.found && t.nontrivial;
  };
  if (exec == Execution::Serial) {
    for (long i = 0; i < n; ++i) run(i, instances, draws, failures, nontrivial);
  } else {
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : instances, draws, failures, nontrivial)
    for (long i = 0; i < n; ++i) run(i, instances, draws, failures, nontrivial);
  }
  return {instances, draws, failures, nontrivial};
}

TransformSweep transform_sweep(std::uint64_t seed, const TransformConfig& config, Execution exec) {
  std::size_t checks = 0, disagreements = 0, max_states = 0;
  FirstByIndex first;
  const long n = static_cast<long>(config.models);
  auto run = [&](long i, std::size_t& ch, std::size_t& di, std::size_t& mx) {
    auto t = transform_trial(seed, static_cast<std::size_t>(i), config);
    ch += t.report.checks;
    di += t.report.disagreements.size();
    mx = std::max(mx, t.states);
    if (!t.report.ok()) {
      const auto& d = t.report.disagreements.front();
      first.offer(static_cast<std::size_t>(i), "model #" + std::to_string(i) + ": " + d.formula + " at " +
                                                  d.source_state + " / " + d.target_state);
    }
  };
  if (exec == Execution::Serial) {
    for (long i = 0; i < n; ++i) run(i, checks, disagreements, max_states);
  } else {
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : checks, disagreements) reduction(max : max_states)
    for (long i = 0; i < n; ++i) run(i, checks, disagreements, max_states);
  }
  return {config.models, checks, disagreements, max_states, first.get()};
}

OracleCheck oracle_check(const Formula& f) {
  OracleCheck c;
  const SatResult r = sat_ip(f);
  c.sat = r.sat();
  c.formula_length = r.formula_length;
  if (r.sat()) {
    c.witness_states = r.witness->space().size();
    c.witness_measures = r.witness->measures().size();
    c.witness_checked = validate(*r.witness).empty() &&
                        eval(AnyModel(*r.witness), Semantics::MultiMeasure, r.designated_state, f) &&
                        within_witness_bounds(r);
  }
  if (auto w = enumerate_sat_preferential(f)) {
    c.preferential = eval(AnyModel(w->model), Semantics::Injection, w->state, f);
  }
  return c;
}

OracleSweep oracle_sweep(std::uint64_t seed, const OracleConfig& config, Execution exec) {
  std::size_t sat = 0, preferential = 0, contradictions = 0, uncertified = 0, witness_failures = 0;
  FirstByIndex first;
  const long n = static_cast<long>(config.formulas);
  const auto ls = letters(config.letters);
  auto run = [&](long i, std::size_t& sa, std::size_t& pr, std::size_t& co, std::size_t& un, std::size_t& wf) {
    Rng rng = trial_rng(seed, static_cast<std::size_t>(i));
    const Formula f = random_formula(rng, ls, config.max_size, config.max_depth);
    const OracleCheck c = oracle_check(f);
    sa += c.sat;
    pr += c.preferential;
    co += c.contradiction();
    un += c.sat && !c.preferential;
    wf += c.sat && !c.witness_checked;
    if (c.contradiction()) first.offer(static_cast<std::size_t>(i), render(f));
  };
  if (exec == Execution::Serial) {
    for (long i = 0; i < n; ++i) run(i, sat, preferential, contradictions, uncertified, witness_failures);
  } else {
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : sat, preferential, contradictions, uncertified, witness_failures)
    for (long i = 0; i < n; ++i) run(i, sat, preferential, contradictions, uncertified, witness_failures);
  }
  return {config.formulas, sat, preferential, contradictions, uncertified, witness_failures, first.get()};
}

}  // namespace comparo
