#include <gtest/gtest.h>

#include "comparo/errors.hpp"
#include "comparo/random.hpp"
#include "comparo/transform.hpp"
#include "fixtures.hpp"

using namespace comparo;

namespace {

const Formula p = Formula::atom("p");

std::size_t plus_copies_of(const Lemma4Result& r, StateIndex origin) {
  std::size_t n = 0;
  for (std::size_t t = 0; t < r.tags.size(); ++t) n += r.tags[t].origin == origin && r.model.plus().contains(t);
  return n;
}

EquivalenceReport audit4(const MultiMeasureModel& m, const Lemma4Result& r, const std::vector<Formula>& fs) {
  return audit_equivalence(AnyModel(m), Semantics::MultiMeasure, AnyModel(r.model), Semantics::Cardinality,
                           origin_map(r.tags), fs);
}

EquivalenceReport audit5(const MultiMeasureModel& m, const Lemma5Result& r, const std::vector<Formula>& fs) {
  return audit_equivalence(AnyModel(m), Semantics::MultiMeasure, AnyModel(r.model), Semantics::Injection,
                           origin_map(r.tags), fs);
}

}  // namespace

TEST(SingleMeasureTranslation, ScalesByCommonDenominator) {
  const auto m = fixture::single_measure({Rational(2, 3), Rational(1, 3)}, {"s0"});
  const Lemma4Result r = lemma4(m);
  EXPECT_EQ(r.scale, 3);
  EXPECT_EQ(r.model.plus().count(), 3u);
  EXPECT_EQ(plus_copies_of(r, 0), 2u);
  EXPECT_EQ(plus_copies_of(r, 1), 1u);
  EXPECT_EQ(r.model.space().id(0), "s0");
  EXPECT_EQ(r.model.space().id(2), "s0#0.1");
  EXPECT_TRUE(audit4(m, r, template_formulas({"p"})).ok());
}

TEST(SingleMeasureTranslation, ZeroWeightStateStaysOutsidePlus) {
  const auto m = fixture::single_measure({Rational(1), Rational(0)}, {"s0"});
  const Lemma4Result r = lemma4(m);
  ASSERT_EQ(r.model.space().size(), 2u);
  EXPECT_TRUE(r.model.plus().contains(0));
  EXPECT_FALSE(r.model.plus().contains(1));
  // p >= T holds at s1 because every W+ state satisfies p; it fails once p
  // moves to the zero-weight state.
  const Formula pt = Formula::geq(p, Formula::top());
  EXPECT_TRUE(eval(AnyModel(r.model), Semantics::Cardinality, "s1", pt));
  const auto moved = lemma4(fixture::single_measure({Rational(1), Rational(0)}, {"s1"}));
  EXPECT_FALSE(eval(AnyModel(moved.model), Semantics::Cardinality, "s1", pt));
}

TEST(SingleMeasureTranslation, UniformMeasure) {
  const Lemma4Result r = lemma4(fixture::single_measure({Rational(1, 2), Rational(1, 2)}, {}));
  EXPECT_EQ(r.scale, 2);
  EXPECT_EQ(plus_copies_of(r, 0), 1u);
  EXPECT_EQ(plus_copies_of(r, 1), 1u);
}

TEST(SingleMeasureTranslation, PlusSizeEqualsScale) {
  for (std::size_t i = 0; i < 300; ++i) {
    Rng rng = trial_rng(71, i);
    const MultiMeasureModel m = random_multimeasure_model(rng, 4, 1, letters(2), 6);
    const Lemma4Result r = lemma4(m);
    ASSERT_EQ(Rational(r.model.plus().count()), r.scale);
    for (StateIndex w = 0; w < m.space().size(); ++w)
      ASSERT_EQ(Rational(plus_copies_of(r, w)), m.measures()[0][w] * r.scale);
    ASSERT_TRUE(validate(AnyModel(r.model)).empty());
  }
}

TEST(SingleMeasureTranslation, Errors) {
  EXPECT_THROW(lemma4(fixture::a0_model()), ModelError);
  EXPECT_THROW(lemma4(fixture::single_measure({Rational(1, 1000003), Rational(1000002, 1000003)}, {})),
               CapacityError);
}

TEST(MultiMeasureTranslation, SingleMeasureMatchesCardinalityTranslation) {
  const auto m = fixture::single_measure({Rational(2, 3), Rational(1, 3)}, {"s0"});
  const Lemma5Result r5 = lemma5(m);
  const Lemma4Result r4 = lemma4(m);
  ASSERT_EQ(r5.layers.size(), 1u);
  EXPECT_EQ(r5.layer_plus[0].size(), r4.model.plus().count());
  // Every field state dominates every other.
  const Preorder& order = *r5.model.preorder();
  for (auto x : r5.model.field().members())
    for (auto y : r5.model.field().members()) EXPECT_TRUE(order.geq(x, y));
  const auto fs = template_formulas({"p"});
  EXPECT_TRUE(audit5(m, r5, fs).ok());
  EXPECT_TRUE(audit4(m, r4, fs).ok());
}

TEST(MultiMeasureTranslation, LayerSizes) {
  StateSpace s({"u", "v"});
  const MultiMeasureModel m(s, {{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}}, {});
  const Lemma5Result r = lemma5(m);
  ASSERT_EQ(r.layers.size(), 2u);
  EXPECT_EQ(r.layers[0].size(), 2u);
  EXPECT_EQ(r.layers[1].size(), 2u * (2u + 1u));
  EXPECT_EQ(r.model.space().size(), lemma5_size(m));
  EXPECT_TRUE(validate(AnyModel(r.model)).empty());
  EXPECT_TRUE(r.model.preorder()->is_total());
}

TEST(MultiMeasureTranslation, PreservesIncomparability) {
  const MultiMeasureModel m = fixture::a0_model();
  const Lemma5Result r = lemma5(m);
  const Formula np = Formula::neg(p);
  const Formula f = Formula::conj(Formula::neg(Formula::geq(p, np)), Formula::neg(Formula::geq(np, p)));
  const AnyModel t(r.model);
  for (StateIndex x = 0; x < r.model.space().size(); ++x) EXPECT_TRUE(eval(t, Semantics::Injection, x, f));
  EXPECT_TRUE(audit5(m, r, template_formulas({"p"})).ok());
}

TEST(MultiMeasureTranslation, TotalLevelsAndCopyFidelity) {
  for (std::size_t i = 0; i < 100; ++i) {
    Rng rng = trial_rng(72, i);
    const MultiMeasureModel m = random_multimeasure_model(rng, 3, 2, letters(2), 3);
    const Lemma5Result r = lemma5(m);
    ASSERT_TRUE(validate(AnyModel(r.model)).empty());
    ASSERT_EQ(r.model.space().size(), lemma5_size(m));
    const Preorder& order = *r.model.preorder();
    ASSERT_TRUE(order.is_total());
    // Lower layers dominate; equal layers are equivalent.
    for (std::size_t a = 0; a < r.layer_plus.size(); ++a)
      for (std::size_t b = 0; b < r.layer_plus.size(); ++b)
        if (!r.layer_plus[a].empty() && !r.layer_plus[b].empty())
          ASSERT_EQ(order.geq(r.layer_plus[a][0], r.layer_plus[b][0]), a <= b);
    for (std::size_t t = 0; t < r.tags.size(); ++t)
      for (const auto& [atom, set] : m.valuation())
        ASSERT_EQ(r.model.valuation().at(atom).contains(t), set.contains(r.tags[t].origin));
  }
}

// Whenever measure i ranks Y strictly above X, the copies of Y in layer i
// outnumber those of X by more than every state of the lower layers.
TEST(MultiMeasureTranslation, LayerBlocking) {
  std::size_t strict = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    Rng rng = trial_rng(73, i);
    const MultiMeasureModel m = random_multimeasure_model(rng, 3, 3, {}, 3);
    const Lemma5Result r = lemma5(m);
    const std::size_t n = m.space().size();
    std::size_t lower = 0;
    for (std::size_t layer = 0; layer < r.layers.size(); ++layer) {
      for (unsigned xm = 0; xm < (1u << n); ++xm) {
        for (unsigned ym = 0; ym < (1u << n); ++ym) {
          StateSet x(n), y(n);
          for (std::size_t w = 0; w < n; ++w) {
            x.set(w, (xm >> w) & 1u);
            y.set(w, (ym >> w) & 1u);
          }
          if (!(measure_of(m.measures()[layer], y) > measure_of(m.measures()[layer], x))) continue;
          std::size_t cx = 0, cy = 0;
          for (auto t : r.layer_plus[layer]) {
            cx += x.contains(r.tags[t].origin);
            cy += y.contains(r.tags[t].origin);
          }
          ASSERT_GT(cy, cx + lower);
          ++strict;
        }
      }
      lower += r.layers[layer].size();
    }
  }
  EXPECT_GT(strict, 0u);
}

TEST(MultiMeasureTranslation, Caps) {
  StateSpace s({"a", "b", "c", "d", "e"});
  EXPECT_THROW(lemma5(MultiMeasureModel(s, {Measure(5, Rational(1, 5))}, {})), CapacityError);
  StateSpace two({"a", "b"});
  const Measure half{Rational(1, 2), Rational(1, 2)};
  EXPECT_THROW(lemma5(MultiMeasureModel(two, {half, half, half, half}, {})), CapacityError);
  const Measure fine{Rational(1, 97), Rational(96, 97)};
  const MultiMeasureModel big(two, {fine, fine, fine}, {});
  EXPECT_GT(lemma5_size(big), kLemma5MaxOutput);
  EXPECT_THROW(lemma5(big), CapacityError);
}

TEST(Audit, IdentityHasNoDisagreements) {
  const AnyModel m(fixture::l4_model());
  std::vector<std::pair<StateIndex, StateIndex>> id{{0, 0}, {1, 1}, {2, 2}};
  const auto report = audit_equivalence(m, Semantics::Injection, m, Semantics::Injection, id, template_formulas(letters(3)));
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.checks, 3 * template_formulas(letters(3)).size());
}

TEST(Audit, DetectsDisagreement) {
  // Function and injection lifting differ on the L4 model.
  const AnyModel m(fixture::l4_model());
  const Formula f = Formula::geq(p, Formula::disj(Formula::atom("q"), Formula::atom("r")));
  const auto report = audit_equivalence(m, Semantics::Function, m, Semantics::Injection, {{0, 0}}, {f});
  ASSERT_EQ(report.disagreements.size(), 1u);
  EXPECT_TRUE(report.disagreements[0].source_value);
  EXPECT_FALSE(report.disagreements[0].target_value);
}

TEST(Audit, TemplateSuiteShape) {
  const auto flat = template_formulas({"p", "q"}, false);
  const auto all = template_formulas({"p", "q"});
  EXPECT_GT(all.size(), flat.size());
  for (const auto& f : flat) EXPECT_LE(modal_depth(f), 1u);
  std::size_t deeper = 0;
  for (const auto& f : all) deeper += modal_depth(f) > 1;
  EXPECT_GT(deeper, 0u);
  EXPECT_LT(template_formulas({"p"}).size(), all.size());
}
