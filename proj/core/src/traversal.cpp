#include <algorithm>
#include <deque>

#include "ncg/error.hpp"
#include "ncg/invariants.hpp"

namespace ncg {

std::vector<std::size_t> bfs_distances(const Graph& g, std::size_t source) {
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    g.neighbors(u).for_each([&](std::size_t w) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  const auto dist = bfs_distances(g, 0);
  return std::find(dist.begin(), dist.end(), kUnreachable) == dist.end();
}

std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t best = 0;
  for (std::size_t v = 0; v < g.order(); ++v) {
    for (auto d : bfs_distances(g, v)) {
      if (d == kUnreachable) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

std::optional<std::size_t> girth(const Graph& g) {
  std::size_t best = kUnreachable;
  const std::size_t n = g.order();
  std::vector<std::size_t> dist(n);
  std::vector<std::size_t> parent(n);
  for (std::size_t root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    dist[root] = 0;
    parent[root] = kUnreachable;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      if (2 * dist[u] + 1 >= best) break;
      g.neighbors(u).for_each([&](std::size_t w) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      });
    }
  }
  if (best == kUnreachable) return std::nullopt;
  return best;
}

bool is_eulerian(const Graph& g) {
  if (!is_connected(g)) return false;
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (g.degree(v) % 2 != 0) return false;
  }
  return true;
}

std::string_view to_string(Hamiltonicity h) {
  switch (h) {
    case Hamiltonicity::Yes: return "yes";
    case Hamiltonicity::No: return "no";
    case Hamiltonicity::DiracGuaranteed: return "dirac-guaranteed";
    case Hamiltonicity::Unknown: return "unknown";
  }
  return "unknown";
}

bool dirac_condition(const Graph& g) { return g.order() >= 3 && 2 * g.min_degree() > g.order(); }

namespace {

struct HamiltonSearch {
  const Graph& g;
  std::uint64_t node_limit;
  std::uint64_t nodes = 0;
  std::vector<std::size_t> path;
  Bitset unused;

  bool extend() {
    if (++nodes > node_limit) throw GuardExceeded("Hamiltonian cycle search exceeded its node budget");
    const std::size_t last = path.back();
    if (unused.none()) return g.adjacent(last, path.front());
    Bitset next = g.neighbors(last) & unused;
    // Every unused vertex still needs two possible cycle neighbours.
    bool dead = false;
    unused.for_each([&](std::size_t v) {
      if (dead) return;
      const std::size_t ways = (g.neighbors(v) & unused).count() + (g.adjacent(v, last) ? 1 : 0) +
                               (g.adjacent(v, path.front()) ? 1 : 0);
      if (ways < 2) dead = true;
    });
    if (dead) return false;
    for (std::size_t v = next.find_first(); v < next.size(); v = next.find_next(v + 1)) {
      path.push_back(v);
      unused.reset(v);
      if (extend()) return true;
      unused.set(v);
      path.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::size_t>> find_hamiltonian_cycle(const Graph& g, std::uint64_t node_limit) {
  if (g.order() < 3 || !is_connected(g)) return std::nullopt;
  HamiltonSearch search{g, node_limit, 0, {0}, Bitset(g.order())};
  search.unused.set_all();
  search.unused.reset(0);
  if (search.extend()) return search.path;
  return std::nullopt;
}

bool is_hamiltonian_cycle(const Graph& g, const std::vector<std::size_t>& cycle) {
  if (cycle.size() != g.order() || g.order() < 3) return false;
  Bitset seen(g.order());
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (cycle[i] >= g.order() || seen.test(cycle[i])) return false;
    seen.set(cycle[i]);
    if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

Hamiltonicity hamiltonian(const Graph& g, std::size_t guard, std::uint64_t node_limit) {
  if (g.order() < 3) return Hamiltonicity::No;
  if (dirac_condition(g)) return Hamiltonicity::DiracGuaranteed;
  if (g.order() > guard) return Hamiltonicity::Unknown;
  try {
    return find_hamiltonian_cycle(g, node_limit) ? Hamiltonicity::Yes : Hamiltonicity::No;
  } catch (const GuardExceeded&) {
    return Hamiltonicity::Unknown;
  }
}

bool is_dominating(const Graph& g, const std::vector<std::size_t>& set) {
  Bitset covered(g.order());
  for (auto v : set) {
    covered.set(v);
    covered |= g.neighbors(v);
  }
  return covered.count() == g.order();
}

std::optional<std::vector<std::vector<std::size_t>>> multipartite_decomposition(const Graph& g) {
  const Graph co = g.complement();
  std::vector<bool> seen(g.order(), false);
  std::vector<std::vector<std::size_t>> parts;
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (seen[v]) continue;
    std::vector<std::size_t> part;
    const auto dist = bfs_distances(co, v);
    for (std::size_t u = 0; u < g.order(); ++u) {
      if (dist[u] != kUnreachable) {
        part.push_back(u);
        seen[u] = true;
      }
    }
    for (std::size_t a = 0; a < part.size(); ++a) {
      for (std::size_t b = a + 1; b < part.size(); ++b) {
        if (g.adjacent(part[a], part[b])) return std::nullopt;
      }
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

}  // namespace ncg
