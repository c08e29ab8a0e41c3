#pragma once

// Small hand-built models shared by several test files.

#include <string>
#include <vector>

#include "comparo/models.hpp"

namespace fixture {

using namespace comparo;

/// W = W_>= = {w1,w2,w3}, w1 above w2 and w3; p at w1, q at w2, r at w3.
/// p >= q and p >= r hold but p >= (q | r) fails under injection lifting.
inline PreferentialModel l4_model() {
  StateSpace s({"w1", "w2", "w3"});
  Valuation v;
  v.emplace("p", s.make_set({"w1"}));
  v.emplace("q", s.make_set({"w2"}));
  v.emplace("r", s.make_set({"w3"}));
  return PreferentialModel(s, StateSet::full(3), {{0, 1}, {0, 2}}, std::move(v));
}

/// W = {u,v}, p at u, measures 3/5 and 1/5 on u: p and ~p are incomparable.
inline MultiMeasureModel a0_model() {
  StateSpace s({"u", "v"});
  Valuation v;
  v.emplace("p", s.make_set({"u"}));
  return MultiMeasureModel(s, {{Rational(3, 5), Rational(2, 5)}, {Rational(1, 5), Rational(4, 5)}}, std::move(v));
}

/// One measure over `weights.size()` states s0.., p at the states listed.
inline MultiMeasureModel single_measure(std::vector<Rational> weights, const std::vector<std::string>& p_states) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < weights.size(); ++i) ids.push_back("s" + std::to_string(i));
  StateSpace s(ids);
  Valuation v;
  v.emplace("p", s.make_set(p_states));
  return MultiMeasureModel(s, {std::move(weights)}, std::move(v));
}

}  // namespace fixture
