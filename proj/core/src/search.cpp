#include <algorithm>
#include <numeric>

#include "ncg/error.hpp"
#include "ncg/invariants.hpp"

namespace ncg {

namespace {

struct NodeBudgetExhausted {};

// Branch and bound for a maximum clique with greedy-colouring bounds.
class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, std::uint64_t node_limit) : g_(g), node_limit_(node_limit) {}

  /// Returns true when the search finished.
  bool run() {
    Bitset all(g_.order());
    all.set_all();
    try {
      expand(all);
    } catch (const NodeBudgetExhausted&) {
      return false;
    }
    return true;
  }

  const std::vector<std::size_t>& best() const { return best_; }

 private:
  void expand(Bitset candidates) {
    if (++nodes_ > node_limit_) throw NodeBudgetExhausted{};
    std::vector<std::size_t> order;
    std::vector<std::size_t> bound;
    colour_sort(candidates, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + bound[i] <= best_.size()) return;
      const std::size_t v = order[i];
      current_.push_back(v);
      Bitset next = candidates & g_.neighbors(v);
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(next);
      }
      current_.pop_back();
      candidates.reset(v);
    }
  }

  // Greedy colouring of the candidates; bound[i] is the colour count used up
  // to order[i], an upper bound on any clique among order[0..i].
  void colour_sort(const Bitset& candidates, std::vector<std::size_t>& order, std::vector<std::size_t>& bound) const {
    Bitset uncoloured = candidates;
    std::size_t colour = 0;
    while (uncoloured.any()) {
      ++colour;
      Bitset available = uncoloured;
      for (std::size_t v = available.find_first(); v < available.size(); v = available.find_next(v + 1)) {
        available.subtract(g_.neighbors(v));
        uncoloured.reset(v);
        order.push_back(v);
        bound.push_back(colour);
      }
    }
  }

  const Graph& g_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

std::vector<std::size_t> greedy_clique(const Graph& g) {
  std::vector<std::size_t> best;
  for (std::size_t start = 0; start < g.order(); ++start) {
    std::vector<std::size_t> clique{start};
    Bitset candidates = g.neighbors(start);
    while (candidates.any()) {
      std::size_t pick = candidates.find_first();
      std::size_t pick_score = 0;
      candidates.for_each([&](std::size_t v) {
        const std::size_t score = candidates.intersection_count(g.neighbors(v));
        if (score > pick_score) {
          pick = v;
          pick_score = score;
        }
      });
      clique.push_back(pick);
      candidates &= g.neighbors(pick);
    }
    if (clique.size() > best.size()) best = std::move(clique);
  }
  return best;
}

std::vector<std::size_t> dsatur_greedy(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> colour(n, kUnreachable);
  std::vector<Bitset> seen(n, Bitset(n + 1));
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = kUnreachable;
    std::size_t pick_sat = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (colour[v] != kUnreachable) continue;
      const std::size_t sat = seen[v].count();
      if (pick == kUnreachable || sat > pick_sat || (sat == pick_sat && g.degree(v) > g.degree(pick))) {
        pick = v;
        pick_sat = sat;
      }
    }
    std::size_t c = 0;
    while (seen[pick].test(c)) ++c;
    colour[pick] = c;
    g.neighbors(pick).for_each([&](std::size_t w) { seen[w].set(c); });
  }
  return colour;
}

// DSATUR backtracking for a proper colouring with at most k colours.
class ColouringSearch {
 public:
  ColouringSearch(const Graph& g, std::size_t k, std::uint64_t node_limit)
      : g_(g), k_(k), node_limit_(node_limit), colour_(g.order(), kUnreachable), forbid_(g.order(), std::vector<std::size_t>(k, 0)) {}

  bool run() { return assign(0, 0); }
  const std::vector<std::size_t>& colouring() const { return colour_; }

 private:
  bool assign(std::size_t done, std::size_t used) {
    if (done == g_.order()) return true;
    if (++nodes_ > node_limit_) throw GuardExceeded("colouring search exceeded its node budget");
    std::size_t pick = kUnreachable;
    std::size_t pick_sat = 0;
    for (std::size_t v = 0; v < g_.order(); ++v) {
      if (colour_[v] != kUnreachable) continue;
      const std::size_t sat = saturation(v);
      if (pick == kUnreachable || sat > pick_sat || (sat == pick_sat && g_.degree(v) > g_.degree(pick))) {
        pick = v;
        pick_sat = sat;
      }
    }
    const std::size_t limit = std::min(k_, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (forbid_[pick][c] != 0) continue;
      colour_[pick] = c;
      g_.neighbors(pick).for_each([&](std::size_t w) { ++forbid_[w][c]; });
      if (assign(done + 1, std::max(used, c + 1))) return true;
      g_.neighbors(pick).for_each([&](std::size_t w) { --forbid_[w][c]; });
      colour_[pick] = kUnreachable;
    }
    return false;
  }

  std::size_t saturation(std::size_t v) const {
    return static_cast<std::size_t>(std::count_if(forbid_[v].begin(), forbid_[v].end(), [](std::size_t f) { return f != 0; }));
  }

  const Graph& g_;
  std::size_t k_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> colour_;
  std::vector<std::vector<std::size_t>> forbid_;
};

std::vector<std::size_t> greedy_dominating(const Graph& g) {
  Bitset undominated(g.order());
  undominated.set_all();
  std::vector<std::size_t> chosen;
  while (undominated.any()) {
    std::size_t pick = 0;
    std::size_t gain = 0;
    for (std::size_t v = 0; v < g.order(); ++v) {
      const std::size_t here = undominated.intersection_count(g.neighbors(v)) + (undominated.test(v) ? 1 : 0);
      if (here > gain) {
        pick = v;
        gain = here;
      }
    }
    chosen.push_back(pick);
    undominated.reset(pick);
    undominated.subtract(g.neighbors(pick));
  }
  return chosen;
}

class DominationSearch {
 public:
  DominationSearch(const Graph& g, std::size_t upper, std::uint64_t node_limit)
      : g_(g), best_(upper), node_limit_(node_limit), reach_(g.max_degree() + 1) {
    for (std::size_t v = 0; v < g.order(); ++v) {
      Bitset closed = g.neighbors(v);
      closed.set(v);
      closed_.push_back(std::move(closed));
    }
  }

  bool run() {
    Bitset undominated(g_.order());
    undominated.set_all();
    try {
      search(undominated, 0);
    } catch (const NodeBudgetExhausted&) {
      return false;
    }
    return true;
  }

  std::size_t best() const { return best_; }

 private:
  void search(const Bitset& undominated, std::size_t chosen) {
    const std::size_t left = undominated.count();
    if (left == 0) {
      best_ = std::min(best_, chosen);
      return;
    }
    if (chosen + (left + reach_ - 1) / reach_ >= best_) return;
    if (++nodes_ > node_limit_) throw NodeBudgetExhausted{};

    // Some vertex of N[u] must be chosen for the hardest undominated u.
    std::size_t target = kUnreachable;
    std::size_t fewest = kUnreachable;
    undominated.for_each([&](std::size_t u) {
      const std::size_t c = closed_[u].count();
      if (c < fewest) {
        fewest = c;
        target = u;
      }
    });
    std::vector<std::pair<std::size_t, std::size_t>> options;
    closed_[target].for_each([&](std::size_t w) { options.emplace_back(undominated.intersection_count(closed_[w]), w); });
    std::sort(options.begin(), options.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (auto [gain, w] : options) {
      Bitset next = undominated;
      next.subtract(closed_[w]);
      search(next, chosen + 1);
    }
  }

  const Graph& g_;
  std::size_t best_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  std::size_t reach_;
  std::vector<Bitset> closed_;
};

}  // namespace

std::vector<std::size_t> maximum_clique(const Graph& g, std::uint64_t node_limit) {
  if (g.order() == 0) return {};
  CliqueSearch search(g, node_limit);
  search.run();
  auto best = search.best();
  if (best.empty()) best = greedy_clique(g);
  std::sort(best.begin(), best.end());
  return best;
}

Bounded clique_number(const Graph& g, std::size_t guard, std::uint64_t node_limit) {
  if (g.order() == 0) return {0, true};
  if (g.order() > guard) return {static_cast<long long>(greedy_clique(g).size()), false};
  CliqueSearch search(g, node_limit);
  const bool finished = search.run();
  const std::size_t found = std::max(search.best().size(), finished ? 0 : greedy_clique(g).size());
  return {static_cast<long long>(found), finished};
}

Bounded independence_number(const Graph& g, std::size_t guard, std::uint64_t node_limit) {
  return clique_number(g.complement(), guard, node_limit);
}

std::optional<std::vector<std::size_t>> k_coloring(const Graph& g, std::size_t k, std::uint64_t node_limit) {
  if (g.order() == 0) return std::vector<std::size_t>{};
  if (k == 0) return std::nullopt;
  ColouringSearch search(g, k, node_limit);
  if (!search.run()) return std::nullopt;
  return search.colouring();
}

Bounded chromatic_number(const Graph& g, std::size_t guard, std::uint64_t node_limit) {
  if (g.order() == 0) return {0, true};
  const auto greedy = dsatur_greedy(g);
  const std::size_t upper = *std::max_element(greedy.begin(), greedy.end()) + 1;
  if (g.order() > guard) return {static_cast<long long>(upper), false};
  const Bounded clique = clique_number(g, guard, node_limit);
  std::size_t k = static_cast<std::size_t>(clique.value);
  try {
    for (; k < upper; ++k) {
      if (k_coloring(g, k, node_limit)) break;
    }
  } catch (const GuardExceeded&) {
    return {static_cast<long long>(upper), false};
  }
  return {static_cast<long long>(k), true};
}

Bounded domination_number(const Graph& g, std::size_t guard, std::uint64_t node_limit) {
  if (g.order() == 0) return {0, true};
  const std::size_t upper = greedy_dominating(g).size();
  if (g.order() > guard) return {static_cast<long long>(upper), false};
  DominationSearch search(g, upper, node_limit);
  const bool finished = search.run();
  return {static_cast<long long>(search.best()), finished};
}

}  // namespace ncg
