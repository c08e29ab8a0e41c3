#include "comparo/matching.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

#include "comparo/errors.hpp"

namespace comparo {

namespace {

void require_in_field(const Preorder& order, const StateSet& s, const char* what) {
  if (s.size() != order.universe() || !s.subset_of(order.field())) {
    throw EvalError(std::string(what) + " is not inside the preorder's field");
  }
}

constexpr std::size_t kHopcroftKarpEdgeLimit = std::size_t{1} << 20;

// Dinic on the class graph. Node layout: 0 source, 1 sink, then B classes,
// then A classes.
class ClassFlow {
 public:
  explicit ClassFlow(std::size_t n) : adj_(n) {}

  void add_edge(std::size_t u, std::size_t v, long long cap) {
    adj_[u].push_back(edges_.size());
    edges_.push_back({v, cap});
    adj_[v].push_back(edges_.size());
    edges_.push_back({u, 0});
  }

  long long run(std::size_t s, std::size_t t) {
    long long total = 0;
    while (bfs(s, t)) {
      it_.assign(adj_.size(), 0);
      while (long long f = dfs(s, t, std::numeric_limits<long long>::max())) total += f;
    }
    return total;
  }

  // Flow on the forward edge with id e.
  long long flow(std::size_t e) const { return edges_[e ^ 1].cap; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t head(std::size_t e) const { return edges_[e].to; }
  const std::vector<std::size_t>& out(std::size_t u) const { return adj_[u]; }

 private:
  struct Edge {
    std::size_t to;
    long long cap;
  };

  bool bfs(std::size_t s, std::size_t t) {
    level_.assign(adj_.size(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (auto e : adj_[u]) {
        if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
          level_[edges_[e].to] = level_[u] + 1;
          q.push(edges_[e].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  long long dfs(std::size_t u, std::size_t t, long long limit) {
    if (u == t) return limit;
    for (auto& i = it_[u]; i < adj_[u].size(); ++i) {
      auto e = adj_[u][i];
      auto v = edges_[e].to;
      if (edges_[e].cap <= 0 || level_[v] != level_[u] + 1) continue;
      if (long long f = dfs(v, t, std::min(limit, edges_[e].cap))) {
        edges_[e].cap -= f;
        edges_[e ^ 1].cap += f;
        return f;
      }
    }
    return 0;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Edge> edges_;
  std::vector<int> level_;
  std::vector<std::size_t> it_;
};

std::optional<Injection> by_class_flow(const Preorder& order, const StateSet& b, const StateSet& a) {
  const std::size_t nc = order.class_count();
  std::vector<std::vector<StateIndex>> b_members(nc), a_members(nc);
  for (StateIndex x : b.members()) b_members[static_cast<std::size_t>(order.class_of(x))].push_back(x);
  for (StateIndex x : a.members()) a_members[static_cast<std::size_t>(order.class_of(x))].push_back(x);

  ClassFlow g(2 + 2 * nc);
  const std::size_t source = 0, sink = 1;
  auto bnode = [](std::size_t c) { return 2 + c; };
  auto anode = [nc](std::size_t c) { return 2 + nc + c; };
  std::vector<std::size_t> middle;  // edge ids of class-to-class edges
  std::vector<std::pair<std::size_t, std::size_t>> middle_classes;
  for (std::size_t c = 0; c < nc; ++c) {
    if (!b_members[c].empty()) g.add_edge(source, bnode(c), static_cast<long long>(b_members[c].size()));
    if (!a_members[c].empty()) g.add_edge(anode(c), sink, static_cast<long long>(a_members[c].size()));
  }
  for (std::size_t cb = 0; cb < nc; ++cb) {
    if (b_members[cb].empty()) continue;
    for (std::size_t ca : order.classes_above(cb).members()) {
      if (a_members[ca].empty()) continue;
      middle.push_back(g.edge_count());
      middle_classes.emplace_back(cb, ca);
      g.add_edge(bnode(cb), anode(ca), std::numeric_limits<long long>::max() / 4);
    }
  }
  const long long need = static_cast<long long>(b.count());
  if (g.run(source, sink) != need) return std::nullopt;

  std::vector<std::size_t> b_next(nc, 0), a_next(nc, 0);
  Injection f;
  for (std::size_t i = 0; i < middle.size(); ++i) {
    auto [cb, ca] = middle_classes[i];
    for (long long k = g.flow(middle[i]); k > 0; --k) {
      f.emplace_back(b_members[cb][b_next[cb]++], a_members[ca][a_next[ca]++]);
    }
  }
  std::sort(f.begin(), f.end());
  return f;
}

}  // namespace

std::size_t hopcroft_karp_matching(const Preorder& order, const std::vector<StateIndex>& left,
                                   const std::vector<StateIndex>& right, std::vector<long>& match_left) {
  const std::size_t nl = left.size(), nr = right.size();
  std::vector<std::vector<std::size_t>> adj(nl);
  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t j = 0; j < nr; ++j)
      if (order.geq(right[j], left[i])) adj[i].push_back(j);

  constexpr long kFree = -1;
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  match_left.assign(nl, kFree);
  std::vector<long> match_right(nr, kFree);
  std::vector<std::size_t> dist(nl);

  auto bfs = [&] {
    std::queue<std::size_t> q;
    bool reachable_free = false;
    for (std::size_t i = 0; i < nl; ++i) {
      if (match_left[i] == kFree) {
        dist[i] = 0;
        q.push(i);
      } else {
        dist[i] = kInf;
      }
    }
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (auto j : adj[u]) {
        long m = match_right[j];
        if (m == kFree) {
          reachable_free = true;
        } else if (dist[static_cast<std::size_t>(m)] == kInf) {
          dist[static_cast<std::size_t>(m)] = dist[u] + 1;
          q.push(static_cast<std::size_t>(m));
        }
      }
    }
    return reachable_free;
  };

  std::function<bool(std::size_t)> dfs = [&](std::size_t u) {
    for (auto j : adj[u]) {
      long m = match_right[j];
      if (m == kFree || (dist[static_cast<std::size_t>(m)] == dist[u] + 1 && dfs(static_cast<std::size_t>(m)))) {
        match_left[u] = static_cast<long>(j);
        match_right[j] = static_cast<long>(u);
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };

  std::size_t size = 0;
  while (bfs()) {
    for (std::size_t i = 0; i < nl; ++i)
      if (match_left[i] == kFree && dfs(i)) ++size;
  }
  return size;
}

std::optional<Injection> exists_inflationary_injection(const Preorder& order, const StateSet& b, const StateSet& a,
                                                       MatchingEngine engine) {
  require_in_field(order, b, "B");
  require_in_field(order, a, "A");
  const std::size_t nb = b.count(), na = a.count();
  if (nb > na) return std::nullopt;
  if (engine == MatchingEngine::Auto) {
    engine = nb * na <= kHopcroftKarpEdgeLimit ? MatchingEngine::HopcroftKarp : MatchingEngine::ClassFlow;
  }
  if (engine == MatchingEngine::ClassFlow) return by_class_flow(order, b, a);

  auto left = b.members();
  auto right = a.members();
  std::vector<long> match;
  if (hopcroft_karp_matching(order, left, right, match) != nb) return std::nullopt;
  Injection f;
  for (std::size_t i = 0; i < left.size(); ++i) f.emplace_back(left[i], right[static_cast<std::size_t>(match[i])]);
  return f;
}

bool exists_inflationary_function(const Preorder& order, const StateSet& b, const StateSet& a) {
  require_in_field(order, b, "B");
  require_in_field(order, a, "A");
  StateSet a_classes(order.class_count());
  for (StateIndex x : a.members()) a_classes.insert(static_cast<std::size_t>(order.class_of(x)));
  for (StateIndex x : b.members()) {
    const auto& above = order.classes_above(static_cast<std::size_t>(order.class_of(x)));
    if ((above & a_classes).empty()) return false;
  }
  return true;
}

std::optional<Injection> brute_force_injection(const Preorder& order, const StateSet& b, const StateSet& a) {
  require_in_field(order, b, "B");
  require_in_field(order, a, "A");
  auto left = b.members();
  auto right = a.members();
  if (left.size() > kBruteForceInjectionCap) {
    throw CapacityError("brute-force injection search is capped at |B| = " + std::to_string(kBruteForceInjectionCap));
  }
  std::vector<bool> used(right.size(), false);
  Injection f;
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == left.size()) return true;
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (used[j] || !order.geq(right[j], left[i])) continue;
      used[j] = true;
      f.emplace_back(left[i], right[j]);
      if (go(i + 1)) return true;
      f.pop_back();
      used[j] = false;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return f;
}

bool is_inflationary_injection(const Preorder& order, const StateSet& b, const StateSet& a, const Injection& f) {
  if (f.size() != b.count()) return false;
  StateSet seen_b(b.size()), seen_a(a.size());
  for (auto [x, y] : f) {
    if (!b.contains(x) || !a.contains(y) || seen_b.contains(x) || seen_a.contains(y)) return false;
    if (!order.geq(y, x)) return false;
    seen_b.insert(x);
    seen_a.insert(y);
  }
  return true;
}

}  // namespace comparo
