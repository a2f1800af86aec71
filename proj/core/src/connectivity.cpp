#include <algorithm>
#include <deque>
#include <stdexcept>

#include "ncg/invariants.hpp"

namespace ncg {

namespace {

// Unit-capacity flow network with every vertex split into in/out halves.
class SplitNetwork {
 public:
  SplitNetwork(const Graph& g, std::size_t s, std::size_t t) : adj_(2 * g.order()) {
    constexpr int kInf = 1 << 20;
    for (std::size_t v = 0; v < g.order(); ++v) {
      add(in(v), out(v), (v == s || v == t) ? kInf : 1);
    }
    for (auto [u, v] : g.edges()) {
      add(out(u), in(v), kInf);
      add(out(v), in(u), kInf);
    }
  }

  std::size_t max_flow(std::size_t source, std::size_t sink) {
    std::size_t flow = 0;
    std::vector<std::size_t> via(adj_.size());
    while (true) {
      std::fill(via.begin(), via.end(), kNone);
      std::deque<std::size_t> queue{source};
      via[source] = kRoot;
      while (!queue.empty() && via[sink] == kNone) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (auto e : adj_[u]) {
          const Arc& a = arcs_[e];
          if (a.cap > 0 && via[a.to] == kNone) {
            via[a.to] = e;
            queue.push_back(a.to);
          }
        }
      }
      if (via[sink] == kNone) return flow;
      for (std::size_t v = sink; v != source;) {
        const std::size_t e = via[v];
        arcs_[e].cap -= 1;
        arcs_[e ^ 1].cap += 1;
        v = arcs_[e ^ 1].to;
      }
      ++flow;
    }
  }

  static std::size_t in(std::size_t v) { return 2 * v; }
  static std::size_t out(std::size_t v) { return 2 * v + 1; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  static constexpr std::size_t kRoot = static_cast<std::size_t>(-2);

  struct Arc {
    std::size_t to;
    int cap;
  };

  void add(std::size_t u, std::size_t v, int cap) {
    adj_[u].push_back(arcs_.size());
    arcs_.push_back({v, cap});
    adj_[v].push_back(arcs_.size());
    arcs_.push_back({u, 0});
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Arc> arcs_;
};

}  // namespace

std::size_t local_vertex_connectivity(const Graph& g, std::size_t s, std::size_t t) {
  if (s == t || g.adjacent(s, t)) throw std::invalid_argument("local connectivity needs distinct non-adjacent vertices");
  SplitNetwork net(g, s, t);
  return net.max_flow(SplitNetwork::out(s), SplitNetwork::in(t));
}

std::size_t vertex_connectivity(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1) return 0;
  if (!is_connected(g)) return 0;
  if (g.is_complete()) return n - 1;
  // Even's scheme: some vertex among the first kappa + 1 lies outside a
  // minimum separator, so only those need to serve as sources.
  std::size_t best = n - 1;
  for (std::size_t i = 0; i < n && i <= best; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      best = std::min(best, local_vertex_connectivity(g, i, j));
    }
  }
  return best;
}

}  // namespace ncg
