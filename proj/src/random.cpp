#include "comparo/random.hpp"

#include <algorithm>
#include <numeric>

namespace comparo {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

Formula leaf(Rng& rng, const std::vector<std::string>& ls) {
  std::size_t pick = uniform(rng, 0, ls.size() + 1);
  if (pick == ls.size()) return coin(rng, 0.5) ? Formula::top() : Formula::bot();
  if (pick > ls.size()) pick = uniform(rng, 0, ls.size() - 1);
  return Formula::atom(ls[pick]);
}

// `budget` counts primitive nodes still available.
Formula grow(Rng& rng, const std::vector<std::string>& ls, std::size_t budget, std::size_t depth) {
  if (budget <= 1) return leaf(rng, ls);
  std::size_t choice = uniform(rng, 0, depth > 0 ? 5 : 3);
  switch (choice) {
    case 0:
      return leaf(rng, ls);
    case 1:
      return Formula::neg(grow(rng, ls, budget - 1, depth));
    case 2:
    case 3: {
      if (budget < 3) return leaf(rng, ls);
      std::size_t left = uniform(rng, 1, budget - 2);
      Formula a = grow(rng, ls, left, depth);
      Formula b = grow(rng, ls, budget - 1 - left, depth);
      // Half the binary nodes become disjunctions.
      return choice == 2 ? Formula::conj(a, b) : Formula::disj(a, b);
    }
    default: {
      if (budget < 3) return leaf(rng, ls);
      std::size_t left = uniform(rng, 1, budget - 2);
      return Formula::geq(grow(rng, ls, left, depth - 1), grow(rng, ls, budget - 1 - left, depth - 1));
    }
  }
}

}  // namespace

Rng trial_rng(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix(splitmix(seed) ^ splitmix(index + 0x632be59bd9b4e019ULL)));
}

std::vector<std::string> letters(std::size_t n) {
  static const char* names[] = {"p", "q", "r", "s", "t", "u", "v", "w", "x", "y", "z"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(i < 11 ? names[i] : "a" + std::to_string(i));
  return out;
}

Formula random_depth0(Rng& rng, const std::vector<std::string>& ls, std::size_t max_size) {
  return grow(rng, ls, uniform(rng, 1, std::max<std::size_t>(1, max_size)), 0);
}

Formula random_formula(Rng& rng, const std::vector<std::string>& ls, std::size_t max_size, std::size_t max_depth) {
  return grow(rng, ls, uniform(rng, 1, std::max<std::size_t>(1, max_size)), max_depth);
}

PreferentialModel random_preferential_model(Rng& rng, std::size_t max_states, const std::vector<std::string>& ls,
                                            double total_bias) {
  const std::size_t n = uniform(rng, 1, max_states);
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("w" + std::to_string(i + 1));
  StateSpace space(ids);

  StateSet field(n);
  while (field.empty())
    for (std::size_t i = 0; i < n; ++i) field.set(i, coin(rng, 0.75));
  auto members = field.members();

  std::vector<std::pair<StateIndex, StateIndex>> order;
  if (coin(rng, total_bias)) {
    // Levels: lower level dominates. Chain the levels and cycle within each.
    const std::size_t levels = uniform(rng, 1, members.size());
    std::vector<std::vector<StateIndex>> by_level(levels);
    for (auto x : members) by_level[uniform(rng, 0, levels - 1)].push_back(x);
    std::erase_if(by_level, [](const auto& v) { return v.empty(); });
    for (std::size_t l = 0; l < by_level.size(); ++l) {
      const auto& lv = by_level[l];
      for (std::size_t i = 0; i + 1 < lv.size(); ++i) order.emplace_back(lv[i], lv[i + 1]);
      if (lv.size() > 1) order.emplace_back(lv.back(), lv.front());
      if (l + 1 < by_level.size()) order.emplace_back(lv.front(), by_level[l + 1].front());
    }
  } else {
    std::vector<StateIndex> perm = members;
    std::shuffle(perm.begin(), perm.end(), rng);
    const double p = std::uniform_real_distribution<double>(0.1, 0.7)(rng);
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (coin(rng, p)) order.emplace_back(perm[i], perm[j]);
  }

  Valuation v;
  for (const auto& l : ls) {
    StateSet s(n);
    for (std::size_t i = 0; i < n; ++i) s.set(i, coin(rng));
    v.emplace(l, s);
  }
  return PreferentialModel(std::move(space), std::move(field), std::move(order), std::move(v));
}

Measure random_measure(Rng& rng, std::size_t states, unsigned max_den) {
  // Integer parts over a common denominator, then reduced.
  const unsigned den = static_cast<unsigned>(uniform(rng, 1, max_den));
  std::vector<unsigned> parts(states, 0);
  for (unsigned u = 0; u < den; ++u) ++parts[uniform(rng, 0, states - 1)];
  Measure mu;
  for (auto k : parts) {
    Rational q(k, den);
    q.canonicalize();
    mu.push_back(q);
  }
  return mu;
}

MultiMeasureModel random_multimeasure_model(Rng& rng, std::size_t max_states, std::size_t max_measures,
                                            const std::vector<std::string>& ls, unsigned max_den) {
  const std::size_t n = uniform(rng, 1, max_states);
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("w" + std::to_string(i + 1));
  const std::size_t m = uniform(rng, 1, max_measures);
  std::vector<Measure> measures;
  for (std::size_t i = 0; i < m; ++i) measures.push_back(random_measure(rng, n, max_den));
  Valuation v;
  for (const auto& l : ls) {
    StateSet s(n);
    for (std::size_t i = 0; i < n; ++i) s.set(i, coin(rng));
    v.emplace(l, s);
  }
  return MultiMeasureModel(StateSpace(ids), std::move(measures), std::move(v));
}

}  // namespace comparo
