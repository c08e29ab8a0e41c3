#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>

#include "comparo/errors.hpp"
#include "comparo/model_io.hpp"
#include "comparo/models.hpp"
#include "comparo/random.hpp"
#include "fixtures.hpp"

using namespace comparo;

namespace {

bool mentions(const ValidationReport& r, const std::string& text) {
  return std::any_of(r.begin(), r.end(), [&](const std::string& m) { return m.find(text) != std::string::npos; });
}

}  // namespace

TEST(Validate, ClosureSuppliesReflexivity) {
  StateSpace s({"a", "b"});
  PreferentialModel m(s, StateSet::full(2), {{0, 1}}, {});
  EXPECT_TRUE(validate(m).empty());
  ASSERT_NE(m.preorder(), nullptr);
  EXPECT_TRUE(m.preorder()->geq(0, 0));
  EXPECT_TRUE(m.preorder()->geq(1, 1));
  EXPECT_TRUE(m.preorder()->geq(0, 1));
  EXPECT_FALSE(m.preorder()->geq(1, 0));
}

TEST(Validate, MeasureMustSumToOne) {
  StateSpace s({"u", "v"});
  MultiMeasureModel m(s, {{Rational(1, 2), Rational(1, 3)}}, {});
  const auto r = validate(m);
  EXPECT_TRUE(mentions(r, "weights sum to 5/6")) << (r.empty() ? "" : r.front());
}

TEST(Validate, FieldMustBeNonempty) {
  StateSpace s({"a"});
  PreferentialModel m(s, StateSet(1), {}, {});
  EXPECT_TRUE(mentions(validate(m), "W_⪰ must be nonempty"));
}

TEST(Validate, OtherInvariants) {
  StateSpace s({"a", "b"});
  EXPECT_TRUE(mentions(validate(MultiMeasureModel(s, {}, {})), "nonempty"));
  EXPECT_TRUE(mentions(validate(MultiMeasureModel(s, {{Rational(3, 2), Rational(-1, 2)}}, {})), "negative"));
  EXPECT_TRUE(mentions(validate(DistinguishedStateModel(s, StateSet(2), {})), "W₊ must be nonempty"));
  PreferentialModel outside(s, s.make_set({"a"}), {{0, 1}}, {});
  EXPECT_EQ(outside.preorder(), nullptr);
  EXPECT_TRUE(mentions(validate(outside), "outside W_⪰"));
  EXPECT_THROW(StateSpace({"a", "a"}), ModelError);
  EXPECT_TRUE(validate(AnyModel(fixture::l4_model())).empty());
  EXPECT_TRUE(validate(AnyModel(fixture::a0_model())).empty());
}

TEST(CheckPreorder, ReportsFirstFailures) {
  StateSpace s({"a", "b", "c"});
  const auto field = StateSet::full(3);
  EXPECT_TRUE(mentions(check_preorder(s, field, {{0, 1}, {1, 2}}), "reflexivity fails at (a,a)"));
  const std::vector<std::pair<StateIndex, StateIndex>> refl{{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}};
  EXPECT_TRUE(mentions(check_preorder(s, field, refl), "transitivity fails at (a,b),(b,c)"));
  auto full = refl;
  full.emplace_back(0, 2);
  EXPECT_TRUE(check_preorder(s, field, full).empty());
}

TEST(Closure, EmptyGeneratorsGiveDiagonal) {
  const Preorder p = closure(1, StateSet::full(1), {});
  EXPECT_EQ(p.pairs(), (std::vector<std::pair<StateIndex, StateIndex>>{{0, 0}}));
}

TEST(Closure, AddsTransitivePairs) {
  const Preorder p = closure(3, StateSet::full(3), {{0, 1}, {1, 2}});
  const auto pairs = p.pairs();
  EXPECT_NE(std::find(pairs.begin(), pairs.end(), std::make_pair<StateIndex, StateIndex>(0, 2)), pairs.end());
  EXPECT_TRUE(p.is_total());
  EXPECT_EQ(p.class_count(), 3u);
}

TEST(Closure, CyclesCollapseToOneClass) {
  const Preorder p = closure(3, StateSet::full(3), {{0, 1}, {1, 0}});
  EXPECT_EQ(p.class_of(0), p.class_of(1));
  EXPECT_FALSE(p.is_total());
  EXPECT_TRUE(p.geq(1, 0));
}

TEST(Closure, IdempotentAndAgreesWithWarshall) {
  for (std::size_t i = 0; i < 500; ++i) {
    Rng rng = trial_rng(21, i);
    const std::size_t n = 1 + rng() % 6;
    StateSet field(n);
    for (std::size_t x = 0; x < n; ++x) field.set(x, rng() % 4 != 0);
    if (field.empty()) field.insert(0);
    const auto members = field.members();
    std::vector<std::pair<StateIndex, StateIndex>> gens;
    const std::size_t edges = rng() % (2 * n + 1);
    for (std::size_t e = 0; e < edges; ++e)
      gens.emplace_back(members[rng() % members.size()], members[rng() % members.size()]);

    const Preorder once = closure(n, field, gens);
    const Preorder twice = closure(n, field, once.pairs());
    ASSERT_EQ(once, twice);

    // Floyd-Warshall reachability as the reference.
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (auto x : members) reach[x][x] = true;
    for (auto [x, y] : gens) reach[x][y] = true;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (reach[a][k] && reach[k][b]) reach[a][b] = true;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) ASSERT_EQ(once.geq(a, b), reach[a][b]);
    ASSERT_TRUE(check_preorder(StateSpace([&] {
                                 std::vector<std::string> ids;
                                 for (std::size_t x = 0; x < n; ++x) ids.push_back("x" + std::to_string(x));
                                 return ids;
                               }()),
                               field, once.pairs())
                    .empty());
  }
}

TEST(Closure, RejectsPairsOutsideField) {
  StateSet field(2);
  field.insert(0);
  EXPECT_THROW(closure(2, field, {{0, 1}}), ModelError);
}

TEST(MeasureOf, PointMassesEmptyAndWhole) {
  const Measure mu{Rational(3, 5), Rational(2, 5)};
  StateSet u(2);
  u.insert(0);
  EXPECT_EQ(measure_of(mu, u), Rational(3, 5));
  EXPECT_EQ(measure_of(mu, StateSet(2)), 0);
  EXPECT_EQ(measure_of(mu, StateSet::full(2)), 1);
  EXPECT_THROW(measure_of(mu, StateSet(3)), EvalError);
}

TEST(MeasureOf, FinitelyAdditive) {
  for (std::size_t i = 0; i < 300; ++i) {
    Rng rng = trial_rng(22, i);
    const std::size_t n = 1 + rng() % 6;
    const Measure mu = random_measure(rng, n, 6);
    StateSet a(n), b(n);
    for (std::size_t x = 0; x < n; ++x) {
      a.set(x, rng() & 1u);
      b.set(x, rng() & 1u);
    }
    ASSERT_EQ(measure_of(mu, a | b) + measure_of(mu, a & b), measure_of(mu, a) + measure_of(mu, b));
    ASSERT_EQ(measure_of(mu, StateSet::full(n)), 1);
  }
}

TEST(ModelIo, RoundTripAllTypes) {
  const auto dir = std::filesystem::temp_directory_path();
  std::vector<AnyModel> models{fixture::l4_model(), fixture::a0_model()};
  {
    StateSpace s({"a", "b"});
    Valuation v;
    v.emplace("p", s.make_set({"b"}));
    models.emplace_back(DistinguishedStateModel(s, s.make_set({"a", "b"}), v));
  }
  for (std::size_t i = 0; i < 50; ++i) {
    Rng rng = trial_rng(23, i);
    models.emplace_back(random_preferential_model(rng, 5, letters(3)));
    models.emplace_back(random_multimeasure_model(rng, 4, 3, letters(2), 5));
  }
  for (std::size_t i = 0; i < models.size(); ++i) {
    const std::string text = dump_model(models[i]);
    const AnyModel back = parse_model(text);
    ASSERT_EQ(back, models[i]) << text;
    ASSERT_EQ(dump_model(back), text);
    if (i < 3) {
      const auto path = dir / ("comparo_roundtrip_" + std::to_string(i) + ".json");
      save_model(path, models[i]);
      EXPECT_EQ(load_model(path), models[i]);
      std::filesystem::remove(path);
    }
  }
}

TEST(ModelIo, RejectsMalformedInput) {
  EXPECT_THROW(parse_model("{"), ModelError);
  EXPECT_THROW(parse_model(R"({"type":"mystery"})"), ModelError);
  EXPECT_THROW(parse_model(R"({"type":"distinguished","states":["a"],"plus":["a"],"valuation":{},"extra":1})"),
               ModelError);
  EXPECT_THROW(parse_model(R"({"type":"distinguished","states":["a"],"plus":["b"],"valuation":{}})"), ModelError);
  EXPECT_THROW(parse_model(R"({"type":"multimeasure","states":["a"],"measures":[{"a":"1/0"}],"valuation":{}})"),
               ModelError);
  EXPECT_THROW(load_model("/nonexistent/model.json"), ModelError);
}

TEST(ModelIo, ReadsHandWrittenPreferentialModel) {
  const AnyModel m = parse_model(R"({
    "type": "preferential",
    "states": ["w1", "w2", "w3"],
    "distinguished": ["w1", "w2", "w3"],
    "order": [["w1", "w2"], ["w1", "w3"]],
    "valuation": {"p": ["w1"], "q": ["w2"], "r": ["w3"]}
  })");
  EXPECT_EQ(m, AnyModel(fixture::l4_model()));
  EXPECT_EQ(model_type(m), "preferential");
}
