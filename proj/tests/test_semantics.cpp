#include <gtest/gtest.h>

#include "comparo/errors.hpp"
#include "comparo/matching.hpp"
#include "comparo/random.hpp"
#include "comparo/semantics.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace comparo;

namespace {

const Formula p = Formula::atom("p");
const Formula q = Formula::atom("q");
const Formula r = Formula::atom("r");

StateSet set_of(std::size_t n, std::initializer_list<std::size_t> xs) {
  StateSet s(n);
  for (auto x : xs) s.insert(x);
  return s;
}

}  // namespace

TEST(Eval, L4ModelSeparatesLiftings) {
  const AnyModel m(fixture::l4_model());
  const Formula pq = Formula::geq(p, q), pr = Formula::geq(p, r), pqr = Formula::geq(p, Formula::disj(q, r));
  EXPECT_TRUE(eval(m, Semantics::Injection, "w1", pq));
  EXPECT_TRUE(eval(m, Semantics::Injection, "w1", pr));
  EXPECT_FALSE(eval(m, Semantics::Injection, "w1", pqr));
  EXPECT_TRUE(eval(m, Semantics::Function, "w1", pq));
  EXPECT_TRUE(eval(m, Semantics::Function, "w1", pr));
  EXPECT_TRUE(eval(m, Semantics::Function, "w1", pqr));

  const auto w = comparison_witness(std::get<PreferentialModel>(m), p, q);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (Injection{{1, 0}}));
  EXPECT_FALSE(comparison_witness(std::get<PreferentialModel>(m), p, Formula::disj(q, r)).has_value());
}

TEST(Eval, UniformMeasureMakesComplementsEqual) {
  StateSpace s({"u", "v"});
  Valuation v;
  v.emplace("p", s.make_set({"u"}));
  const AnyModel m(MultiMeasureModel(s, {{Rational(1, 2), Rational(1, 2)}}, v));
  EXPECT_TRUE(eval(m, Semantics::MultiMeasure, "u", Formula::geq(p, Formula::neg(p))));
  EXPECT_TRUE(eval(m, Semantics::MultiMeasure, "u", Formula::geq(Formula::neg(p), p)));
}

TEST(Eval, TwoMeasuresBreakComparability) {
  const AnyModel m(fixture::a0_model());
  const Formula np = Formula::neg(p);
  EXPECT_FALSE(eval(m, Semantics::MultiMeasure, "u", Formula::geq(p, np)));
  EXPECT_FALSE(eval(m, Semantics::MultiMeasure, "u", Formula::geq(np, p)));
  EXPECT_TRUE(eval(m, Semantics::MultiMeasure, "v",
                   Formula::conj(Formula::neg(Formula::geq(p, np)), Formula::neg(Formula::geq(np, p)))));
}

TEST(Eval, CardinalityCountsDistinguishedStates) {
  StateSpace s({"a", "b", "c"});
  Valuation v;
  v.emplace("p", s.make_set({"a", "b"}));
  const AnyModel m(DistinguishedStateModel(s, s.make_set({"a", "c"}), v));
  // |p n W+| = 1 = |~p n W+|
  EXPECT_TRUE(eval(m, Semantics::Cardinality, "b", Formula::geq(p, Formula::neg(p))));
  EXPECT_TRUE(eval(m, Semantics::Cardinality, "b", Formula::geq(Formula::neg(p), p)));
  EXPECT_FALSE(eval(m, Semantics::Cardinality, "b", Formula::geq(p, Formula::top())));
}

TEST(Eval, Errors) {
  const AnyModel m(fixture::l4_model());
  EXPECT_THROW(eval(m, Semantics::Injection, "w1", Formula::atom("s")), EvalError);
  EXPECT_THROW(eval(m, Semantics::Injection, "nowhere", p), EvalError);
  EXPECT_THROW(eval(m, Semantics::MultiMeasure, "w1", p), EvalError);
  EXPECT_FALSE(compatible(m, Semantics::Cardinality));
  EXPECT_TRUE(compatible(m, Semantics::Function));
  EXPECT_EQ(parse_semantics("injection"), Semantics::Injection);
  EXPECT_FALSE(parse_semantics("bogus").has_value());
}

TEST(Eval, ComparisonsAreStateIndependent) {
  for (std::size_t i = 0; i < 300; ++i) {
    Rng rng = trial_rng(31, i);
    const auto ls = letters(3);
    const Formula f = Formula::geq(random_formula(rng, ls, 10, 1), random_formula(rng, ls, 10, 1));
    const AnyModel pm(random_preferential_model(rng, 5, ls));
    const AnyModel mm(random_multimeasure_model(rng, 4, 3, ls, 4));
    for (auto sem : {Semantics::Function, Semantics::Injection}) {
      const auto sat = satisfying_states(pm, sem, f);
      ASSERT_TRUE(sat.empty() || sat.count() == sat.size());
    }
    const auto sat = satisfying_states(mm, Semantics::MultiMeasure, f);
    ASSERT_TRUE(sat.empty() || sat.count() == sat.size());
  }
}

TEST(Eval, InjectionImpliesFunction) {
  for (std::size_t i = 0; i < 500; ++i) {
    Rng rng = trial_rng(32, i);
    const auto ls = letters(3);
    const AnyModel m(random_preferential_model(rng, 6, ls));
    const Formula f = Formula::geq(random_depth0(rng, ls, 8), random_depth0(rng, ls, 8));
    if (eval(m, Semantics::Injection, 0, f)) ASSERT_TRUE(eval(m, Semantics::Function, 0, f));
  }
}

TEST(Eval, MultiMeasureAgreesWithNaiveRecursion) {
  const auto ls = letters(2);
  for (std::size_t i = 0; i < 400; ++i) {
    Rng rng = trial_rng(33, i);
    const MultiMeasureModel m = random_multimeasure_model(rng, 4, 3, ls, 5);
    const Formula f = random_formula(rng, ls, 20, 3);
    const auto sat = satisfying_states(AnyModel(m), Semantics::MultiMeasure, f);
    for (std::size_t w = 0; w < m.space().size(); ++w)
      ASSERT_EQ(sat.contains(w), oracle::naive_multimeasure_eval(m, w, f)) << render(f);
  }
}

TEST(Eval, ComparisonIsMonotoneInBothArguments) {
  // a -> a' valid and b' -> b valid make (a >= b) -> (a' >= b') hold.
  for (std::size_t i = 0; i < 300; ++i) {
    Rng rng = trial_rng(34, i);
    const auto ls = letters(3);
    const Formula a = random_depth0(rng, ls, 6), b = random_depth0(rng, ls, 6), c = random_depth0(rng, ls, 6);
    const Formula bigger = Formula::disj(a, c), smaller = Formula::conj(b, c);
    const Formula f = Formula::implies(Formula::geq(a, b), Formula::geq(bigger, smaller));
    const AnyModel pm(random_preferential_model(rng, 6, ls));
    const AnyModel mm(random_multimeasure_model(rng, 4, 2, ls, 4));
    for (auto sem : {Semantics::Function, Semantics::Injection}) ASSERT_TRUE(eval(pm, sem, 0, f));
    ASSERT_TRUE(eval(mm, Semantics::MultiMeasure, 0, f));
  }
}

TEST(Matching, EmptyAndIdentity) {
  const Preorder order = closure(3, StateSet::full(3), {{0, 1}, {0, 2}});
  const auto a = set_of(3, {0, 2});
  const auto none = exists_inflationary_injection(order, StateSet(3), a);
  ASSERT_TRUE(none.has_value());
  EXPECT_TRUE(none->empty());
  const auto id = exists_inflationary_injection(order, a, a);
  ASSERT_TRUE(id.has_value());
  EXPECT_TRUE(is_inflationary_injection(order, a, a, *id));
}

TEST(Matching, Pigeonhole) {
  const Preorder order = closure(3, StateSet::full(3), {{0, 1}, {0, 2}});
  EXPECT_FALSE(exists_inflationary_injection(order, set_of(3, {1, 2}), set_of(3, {0})).has_value());
  EXPECT_TRUE(exists_inflationary_function(order, set_of(3, {1, 2}), set_of(3, {0})));
  EXPECT_FALSE(exists_inflationary_function(order, set_of(3, {1}), StateSet(3)));
}

TEST(Matching, SingletonCases) {
  const Preorder order = closure(2, StateSet::full(2), {{0, 1}});
  EXPECT_FALSE(exists_inflationary_injection(order, set_of(2, {0}), set_of(2, {1})).has_value());
  const auto f = exists_inflationary_injection(order, set_of(2, {1}), set_of(2, {0}));
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(*f, (Injection{{1, 0}}));
}

TEST(Matching, EnginesAgreeWithBruteForce) {
  for (std::size_t i = 0; i < 10000; ++i) {
    Rng rng = trial_rng(35, i);
    const PreferentialModel m = random_preferential_model(rng, 7, {});
    const Preorder& order = *m.preorder();
    const auto members = m.field().members();
    StateSet a(m.space().size()), b(m.space().size());
    for (auto x : members) {
      a.set(x, rng() & 1u);
      b.set(x, rng() & 1u);
    }
    const bool expected = brute_force_injection(order, b, a).has_value();
    for (auto engine : {MatchingEngine::Auto, MatchingEngine::HopcroftKarp, MatchingEngine::ClassFlow}) {
      const auto got = exists_inflationary_injection(order, b, a, engine);
      ASSERT_EQ(got.has_value(), expected) << "trial " << i;
      if (got) ASSERT_TRUE(is_inflationary_injection(order, b, a, *got));
    }
    if (expected) ASSERT_TRUE(exists_inflationary_function(order, b, a));
  }
}

TEST(Matching, LargeTotalPreorderUsesClassFlow) {
  // 2000 states in 4 levels; each level fits into the one above it.
  const std::size_t n = 2000;
  std::vector<std::pair<StateIndex, StateIndex>> gens;
  for (std::size_t x = 0; x + 1 < n; ++x) {
    gens.emplace_back(x, x + 1);
    if ((x + 1) % 500 != 0) gens.emplace_back(x + 1, x);
  }
  const Preorder order = closure(n, StateSet::full(n), gens);
  ASSERT_EQ(order.class_count(), 4u);
  StateSet top(n), rest(n);
  for (std::size_t x = 0; x < n; ++x) (x < 1000 ? top : rest).insert(x);
  const auto f = exists_inflationary_injection(order, rest, top);
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(is_inflationary_injection(order, rest, top, *f));
  EXPECT_FALSE(exists_inflationary_injection(order, top, rest).has_value());
}

TEST(Matching, ErrorsOutsideFieldAndBruteForceCap) {
  const Preorder order = closure(3, set_of(3, {0, 1}), {});
  EXPECT_THROW(exists_inflationary_injection(order, set_of(3, {2}), set_of(3, {0})), EvalError);
  const Preorder big = closure(9, StateSet::full(9), {});
  EXPECT_THROW(brute_force_injection(big, StateSet::full(9), StateSet::full(9)), CapacityError);
}
