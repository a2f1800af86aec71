#pragma once

// Slow reference implementations used to cross-check the library.
// Nothing here calls into ncg beyond plain data types.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ncg/graph.hpp"

namespace oracle {

using Adj = std::vector<std::vector<bool>>;

inline Adj adjacency(const ncg::Graph& g) {
  Adj a(g.order(), std::vector<bool>(g.order(), false));
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = 0; v < g.order(); ++v) a[u][v] = g.adjacent(u, v);
  return a;
}

inline ncg::Graph random_graph(std::size_t n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  ncg::Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline std::vector<std::size_t> members(std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i);
  return out;
}

inline std::size_t clique(const Adj& a) {
  std::size_t n = a.size(), best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    auto s = members(mask);
    bool ok = true;
    for (std::size_t i = 0; ok && i < s.size(); ++i)
      for (std::size_t j = i + 1; ok && j < s.size(); ++j) ok = a[s[i]][s[j]];
    if (ok) best = std::max(best, s.size());
  }
  return best;
}

inline std::size_t independence(const Adj& a) {
  Adj c = a;
  for (std::size_t u = 0; u < a.size(); ++u)
    for (std::size_t v = 0; v < a.size(); ++v) c[u][v] = u != v && !a[u][v];
  return clique(c);
}

inline bool colourable(const Adj& a, std::size_t k) {
  std::size_t n = a.size();
  std::vector<std::size_t> col(n, 0);
  std::function<bool(std::size_t)> go = [&](std::size_t v) {
    if (v == n) return true;
    for (std::size_t c = 0; c < k; ++c) {
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) ok = !(a[u][v] && col[u] == c);
      if (!ok) continue;
      col[v] = c;
      if (go(v + 1)) return true;
    }
    return false;
  };
  return go(0);
}

inline std::size_t chromatic(const Adj& a) {
  if (a.empty()) return 0;
  std::size_t k = 1;
  while (!colourable(a, k)) ++k;
  return k;
}

inline bool dominates(const Adj& a, const std::vector<std::size_t>& s) {
  for (std::size_t v = 0; v < a.size(); ++v) {
    bool hit = false;
    for (auto u : s) hit = hit || u == v || a[u][v];
    if (!hit) return false;
  }
  return true;
}

inline std::size_t domination(const Adj& a) {
  std::size_t n = a.size(), best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    auto s = members(mask);
    if (s.size() < best && dominates(a, s)) best = s.size();
  }
  return best;
}

inline std::vector<std::vector<std::size_t>> floyd(const Adj& a) {
  const std::size_t inf = 1u << 20, n = a.size();
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) d[u][v] = u == v ? 0 : a[u][v] ? 1 : inf;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

/// Length of the shortest cycle by trying every edge removal; 0 for forests.
inline std::size_t girth(const Adj& a) {
  std::size_t n = a.size(), best = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!a[u][v]) continue;
      Adj b = a;
      b[u][v] = b[v][u] = false;
      auto d = floyd(b)[u][v];
      if (d < (1u << 20) && (best == 0 || d + 1 < best)) best = d + 1;
    }
  return best;
}

inline bool connected_without(const Adj& a, std::uint32_t removed) {
  std::size_t n = a.size();
  std::vector<bool> seen(n, false);
  std::size_t start = n;
  for (std::size_t v = 0; v < n; ++v)
    if (!(removed >> v & 1u)) {
      start = v;
      break;
    }
  if (start == n) return true;
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v)
      if (a[u][v] && !seen[v] && !(removed >> v & 1u)) {
        seen[v] = true;
        stack.push_back(v);
      }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!seen[v] && !(removed >> v & 1u)) return false;
  return true;
}

/// Smallest separating vertex set; n - 1 when none exists.
inline std::size_t kappa(const Adj& a) {
  std::size_t n = a.size();
  if (n <= 1) return 0;
  std::size_t best = n - 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    auto k = static_cast<std::size_t>(std::popcount(mask));
    if (k >= best || n - k < 2) continue;
    if (!connected_without(a, mask)) best = k;
  }
  return best;
}

inline bool hamiltonian(const Adj& a) {
  std::size_t n = a.size();
  if (n < 3) return false;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = a[p[n - 1]][p[0]];
    for (std::size_t i = 0; ok && i + 1 < n; ++i) ok = a[p[i]][p[i + 1]];
    if (ok) return true;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return false;
}

inline bool isomorphic(const Adj& a, const Adj& b) {
  if (a.size() != b.size()) return false;
  std::size_t n = a.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t u = 0; ok && u < n; ++u)
      for (std::size_t v = 0; ok && v < n; ++v) ok = a[u][v] == b[p[u]][p[v]];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Prime field F_p algebra given by raw structure constants c[(i*n+j)*n+k].
struct PrimeAlgebra {
  int p;
  std::size_t n;
  std::vector<int> c;

  std::vector<int> bracket(const std::vector<int>& u, const std::vector<int>& v) const {
    std::vector<int> r(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        int s = u[i] * v[j] % p;
        if (!s) continue;
        for (std::size_t k = 0; k < n; ++k) r[k] = (r[k] + s * c[(i * n + j) * n + k]) % p;
      }
    return r;
  }

  std::vector<std::vector<int>> elements() const {
    std::vector<std::vector<int>> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(p);
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<int> v(n);
      std::size_t x = code;
      for (std::size_t i = 0; i < n; ++i, x /= static_cast<std::size_t>(p)) v[i] = static_cast<int>(x % p);
      out.push_back(v);
    }
    return out;
  }
};

inline bool is_zero(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

/// The non-commuting graph built from first principles: vertices are the
/// classes {lambda x + z} of non-central x, edges join classes with a
/// non-commuting pair of members. Classes are keyed by their smallest member.
struct NaiveGraph {
  std::vector<std::vector<int>> reps;
  Adj adj;
  std::size_t center_size = 0;
};

inline NaiveGraph naive_graph(const PrimeAlgebra& L) {
  auto all = L.elements();
  std::vector<std::vector<int>> centre;
  for (auto& z : all) {
    bool central = true;
    for (auto& v : all) central = central && is_zero(L.bracket(z, v));
    if (central) centre.push_back(z);
  }
  std::map<std::vector<int>, std::vector<int>> key_of;  // element -> smallest class member
  std::set<std::vector<int>> centre_set(centre.begin(), centre.end());
  for (auto& x : all) {
    if (centre_set.count(x)) continue;
    std::vector<int> best;
    for (int l = 1; l < L.p; ++l)
      for (auto& z : centre) {
        std::vector<int> y(L.n);
        for (std::size_t i = 0; i < L.n; ++i) y[i] = (l * x[i] + z[i]) % L.p;
        if (best.empty() || y < best) best = y;
      }
    key_of[x] = best;
  }
  std::set<std::vector<int>> keys;
  for (auto& [x, k] : key_of) keys.insert(k);
  NaiveGraph g;
  g.center_size = centre.size();
  g.reps.assign(keys.begin(), keys.end());
  std::map<std::vector<int>, std::size_t> idx;
  for (std::size_t i = 0; i < g.reps.size(); ++i) idx[g.reps[i]] = i;
  g.adj.assign(g.reps.size(), std::vector<bool>(g.reps.size(), false));
  for (auto& [x, kx] : key_of)
    for (auto& [y, ky] : key_of)
      if (!is_zero(L.bracket(x, y))) g.adj[idx[kx]][idx[ky]] = true;
  return g;
}

}  // namespace oracle
