#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "ncg/invariants.hpp"

namespace ncg {

bool is_planar(const Graph& g) {
  const std::size_t n = g.order();
  if (n >= 3 && g.size() > 3 * n - 6) return false;
  if (n <= 4) return true;

  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>,
                                           boost::property<boost::edge_index_t, int>>;
  BoostGraph bg(n);
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace ncg
