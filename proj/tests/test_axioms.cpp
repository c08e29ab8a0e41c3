#include <gtest/gtest.h>

#include "comparo/axioms.hpp"
#include "comparo/decide.hpp"
#include "comparo/errors.hpp"
#include "comparo/random.hpp"
#include "fixtures.hpp"

using namespace comparo;
using K = SchemaId::Kind;

namespace {

const Formula p = Formula::atom("p");
const Formula q = Formula::atom("q");
const Formula r = Formula::atom("r");

StateSet set_of(std::size_t n, std::initializer_list<std::size_t> xs) {
  StateSet s(n);
  for (auto x : xs) s.insert(x);
  return s;
}

// Every state set sequence of length n over `states` points, as bitmasks.
void for_each_sequence(std::size_t states, std::size_t n, const std::function<void(const std::vector<unsigned>&)>& f) {
  std::vector<unsigned> seq(n, 0);
  const unsigned limit = 1u << states;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) return f(seq);
    for (unsigned m = 0; m < limit; ++m) {
      seq[i] = m;
      rec(i + 1);
    }
  };
  rec(0);
}

}  // namespace

TEST(Instantiate, ReflexivityAndA3) {
  EXPECT_EQ(instantiate({K::L1}, {p}), Formula::geq(p, p));
  EXPECT_EQ(instantiate({K::A3}, {}), Formula::neg(Formula::geq(Formula::bot(), Formula::top())));
}

TEST(Instantiate, CancellationSchemaShape) {
  const Formula f = instantiate({K::A4Prime, 1, 1}, {p, q, q, p});
  const Formula premise = Formula::conj(Formula::geq(p, q), Formula::geq(build_equinumerosity({p, q}, {q, p}), Formula::top()));
  EXPECT_EQ(f, Formula::implies(premise, Formula::geq(p, q)));
}

TEST(Instantiate, Errors) {
  EXPECT_THROW(instantiate({K::A4Prime, 0, 1}, {p, q}), Error);
  EXPECT_THROW(instantiate({K::A4Prime, 1, 0}, {p, q, q, p}), Error);
  EXPECT_THROW(instantiate({K::L3}, {p, q}), Error);
  EXPECT_THROW(instantiate({K::A4, 1, 1}, {Formula::geq(p, q), q, q, p}), Error);
}

TEST(Instantiate, SchemaListsPerLogic) {
  EXPECT_EQ(schemas_of(Logic::IL).size(), 6u);
  EXPECT_EQ(schemas_of(Logic::IP).size(), 6u);
  EXPECT_EQ(audit_semantics(Logic::IL), Semantics::Function);
  EXPECT_EQ(audit_semantics(Logic::IP), Semantics::Injection);
  EXPECT_THROW(audit_semantics(Logic::SP), Error);
}

TEST(Balanced, Examples) {
  EXPECT_TRUE(balanced({set_of(2, {0}), set_of(2, {1})}, {set_of(2, {0, 1}), StateSet(2)}));
  EXPECT_FALSE(balanced({set_of(2, {0})}, {set_of(2, {1})}));
  EXPECT_THROW(balanced({set_of(2, {0})}, {}), Error);
}

TEST(Balanced, SymmetricAndPermutationInvariant) {
  for (std::size_t i = 0; i < 500; ++i) {
    Rng rng = trial_rng(41, i);
    const std::size_t n = 1 + rng() % 4, w = 1 + rng() % 5;
    std::vector<StateSet> a, b;
    for (std::size_t j = 0; j < n; ++j) {
      StateSet x(w), y(w);
      for (std::size_t s = 0; s < w; ++s) {
        x.set(s, rng() & 1u);
        y.set(s, rng() & 1u);
      }
      a.push_back(x);
      b.push_back(y);
    }
    const bool ab = balanced(a, b);
    ASSERT_EQ(ab, balanced(b, a));
    std::reverse(a.begin(), a.end());
    ASSERT_EQ(ab, balanced(a, b));
    ASSERT_TRUE(balanced(a, a));
  }
}

// For depth-0 lists, the equinumerosity formula holds at every state exactly
// when the truth-set sequences are balanced. Each slot gets its own letter,
// so every sequence of truth sets over the states is realized; all of them
// are enumerated for |W| <= 4 (|W| <= 3 when n = 3).
TEST(Equinumerosity, BridgeToBalancedSequences) {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::string> slot;
    std::vector<Formula> lhs, rhs;
    for (std::size_t j = 0; j < 2 * n; ++j) {
      slot.push_back("a" + std::to_string(j));
      (j < n ? lhs : rhs).push_back(Formula::atom(slot.back()));
    }
    const Formula eq = build_equinumerosity(lhs, rhs);
    for (std::size_t states = 1; states <= (n == 3 ? 3u : 4u); ++states) {
      std::vector<std::string> ids;
      for (std::size_t s = 0; s < states; ++s) ids.push_back("s" + std::to_string(s));
      const StateSpace space(ids);
      const Measure uniform(states, Rational(1, static_cast<long>(states)));
      for_each_sequence(states, 2 * n, [&](const std::vector<unsigned>& seq) {
        Valuation v;
        std::vector<StateSet> a, b;
        for (std::size_t j = 0; j < 2 * n; ++j) {
          StateSet set(states);
          for (std::size_t s = 0; s < states; ++s) set.set(s, (seq[j] >> s) & 1u);
          (j < n ? a : b).push_back(set);
          v.emplace(slot[j], set);
        }
        const AnyModel m(MultiMeasureModel(space, {uniform}, v));
        const bool everywhere = satisfying_states(m, Semantics::MultiMeasure, eq).count() == states;
        ASSERT_EQ(everywhere, balanced(a, b));
      });
    }
  }
}

TEST(Audit, IpAxiomsHoldOnL4Model) {
  const PreferentialModel m = fixture::l4_model();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng = trial_rng(42, seed);
    const auto report = audit_soundness(m, Logic::IP, rng);
    ASSERT_TRUE(report.violations.empty()) << report.violations.front().schema.name();
    ASSERT_GT(report.instances, 0u);
  }
}

TEST(Audit, L4HoldsUnderFunctionLifting) {
  const PreferentialModel m = fixture::l4_model();
  const AxiomInstance l4{{K::L4}, instantiate({K::L4}, {p, q, r}),
                         Formula::conj(Formula::geq(p, q), Formula::geq(p, r))};
  const auto report = audit_instances(m, Semantics::Function, {l4});
  EXPECT_TRUE(report.violations.empty());
  EXPECT_EQ(report.nonvacuous, 1u);
  Rng rng = trial_rng(43, 0);
  EXPECT_TRUE(audit_soundness(m, Logic::IL, rng).violations.empty());
}

TEST(Audit, L4FailsUnderInjectionLifting) {
  const PreferentialModel m = fixture::l4_model();
  const AxiomInstance l4{{K::L4}, instantiate({K::L4}, {p, q, r}),
                         Formula::conj(Formula::geq(p, q), Formula::geq(p, r))};
  const auto report = audit_instances(m, Semantics::Injection, {l4});
  ASSERT_EQ(report.violations.size(), 3u);  // every state
  EXPECT_EQ(report.violations[0].state, "w1");
  EXPECT_NE(report.violations[0].trace.find("w2"), std::string::npos);
}

TEST(Audit, CancellationInstancesAreExercised) {
  std::size_t total = 0, nonvacuous = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    Rng rng = trial_rng(44, i);
    const PreferentialModel m = random_preferential_model(rng, 6, letters(3));
    const auto report = audit_soundness(m, Logic::IP, rng);
    ASSERT_TRUE(report.violations.empty()) << report.violations.front().trace;
    total += report.cancellation;
    nonvacuous += report.cancellation_nonvacuous;
  }
  EXPECT_GT(total, 0u);
  EXPECT_GT(nonvacuous * 10, total);  // well above vacuity
}

TEST(Audit, SampledInstancesAreIpValid) {
  // Every IP schema instance is valid, so sat_ip refutes its negation.
  const auto ls = letters(2);
  AuditOptions options;
  options.max_component = 5;
  options.max_n = 2;
  options.max_k = 2;
  for (std::size_t i = 0; i < 40; ++i) {
    Rng rng = trial_rng(45, i);
    for (const auto& schema : schemas_of(Logic::IP)) {
      const AxiomInstance inst = random_instance(rng, schema.kind, ls, options);
      ASSERT_TRUE(valid_ip(inst.formula).valid) << inst.schema.name() << ": " << render(inst.formula);
    }
  }
}

TEST(BalancedInstances, ConclusionAlwaysHolds) {
  std::size_t found = 0;
  for (std::size_t i = 0; i < 3000 && found < 300; ++i) {
    Rng rng = trial_rng(46, i);
    const auto inst = draw_balanced_instance(rng, 6, 3, 3);
    if (!inst) continue;
    ++found;
    ASSERT_TRUE(balanced_instance_concludes(*inst));
  }
  EXPECT_GE(found, 300u);
}
