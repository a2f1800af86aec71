#include <algorithm>
#include <map>

#include "ncg/invariants.hpp"

namespace ncg {

std::vector<std::size_t> refine_colors(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> colour(n, 0);
  std::size_t classes = n == 0 ? 0 : 1;
  while (true) {
    using Signature = std::pair<std::size_t, std::vector<std::size_t>>;
    std::vector<Signature> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      g.neighbors(v).for_each([&](std::size_t w) { sig[v].second.push_back(colour[w]); });
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::map<Signature, std::size_t> ids;
    for (const auto& s : sig) ids.emplace(s, 0);
    std::size_t next = 0;
    for (auto& [s, id] : ids) id = next++;
    for (std::size_t v = 0; v < n; ++v) colour[v] = ids.at(sig[v]);
    if (ids.size() == classes) return colour;
    classes = ids.size();
  }
}

namespace {

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  const std::vector<std::size_t>& ca;
  const std::vector<std::size_t>& cb;
  std::uint64_t node_limit;
  std::uint64_t nodes = 0;
  std::vector<std::size_t> order;
  std::vector<std::size_t> map;
  std::vector<bool> taken;

  // nullopt when the budget runs out.
  std::optional<bool> extend(std::size_t depth) {
    if (depth == order.size()) return true;
    if (++nodes > node_limit) return std::nullopt;
    const std::size_t v = order[depth];
    for (std::size_t w = 0; w < b.order(); ++w) {
      if (taken[w] || cb[w] != ca[v]) continue;
      bool consistent = true;
      for (std::size_t i = 0; i < depth && consistent; ++i) {
        const std::size_t u = order[i];
        consistent = a.adjacent(u, v) == b.adjacent(map[u], w);
      }
      if (!consistent) continue;
      map[v] = w;
      taken[w] = true;
      const auto r = extend(depth + 1);
      taken[w] = false;
      if (!r || *r) return r;
    }
    return false;
  }
};

// Rarest colour first, then prefer vertices adjacent to those already placed.
std::vector<std::size_t> search_order(const Graph& g, const std::vector<std::size_t>& colour) {
  const std::size_t n = g.order();
  std::map<std::size_t, std::size_t> freq;
  for (auto c : colour) ++freq[c];
  std::vector<std::size_t> order;
  std::vector<bool> placed(n, false);
  std::vector<std::size_t> links(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = kUnreachable;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (pick == kUnreachable || links[v] > links[pick] ||
          (links[v] == links[pick] && freq[colour[v]] < freq[colour[pick]])) {
        pick = v;
      }
    }
    placed[pick] = true;
    order.push_back(pick);
    g.neighbors(pick).for_each([&](std::size_t w) { ++links[w]; });
  }
  return order;
}

}  // namespace

std::optional<bool> is_isomorphic(const Graph& a, const Graph& b, std::size_t guard, std::uint64_t node_limit) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto da = a.degrees();
  auto db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  if (girth(a) != girth(b)) return false;

  // Refine both graphs jointly so colours are comparable across them.
  const std::size_t n = a.order();
  Graph joint(2 * n);
  for (auto [u, v] : a.edges()) joint.add_edge(u, v);
  for (auto [u, v] : b.edges()) joint.add_edge(n + u, n + v);
  const auto colour = refine_colors(joint);
  std::vector<std::size_t> ca(colour.begin(), colour.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<std::size_t> cb(colour.begin() + static_cast<std::ptrdiff_t>(n), colour.end());
  auto ha = ca;
  auto hb = cb;
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  if (ha != hb) return false;

  if (n > guard) return std::nullopt;
  IsoSearch search{a, b, ca, cb, node_limit, 0, search_order(a, ca), std::vector<std::size_t>(n), std::vector<bool>(n, false)};
  return search.extend(0);
}

}  // namespace ncg
