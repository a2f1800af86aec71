#include <sstream>

#include "ncg/ncgraph.hpp"

namespace ncg {

std::string export_dot(const NCGraph& g) {
  std::ostringstream out;
  out << "graph ncg {\n";
  for (std::size_t v = 0; v < g.graph.order(); ++v) {
    out << "  " << v << " [label=\"" << point_label(g, v) << "\"];\n";
  }
  for (auto [u, v] : g.graph.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_graphml(const NCGraph& g) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
      << "  <graph id=\"ncg\" edgedefault=\"undirected\">\n";
  for (std::size_t v = 0; v < g.graph.order(); ++v) {
    out << "    <node id=\"n" << v << "\"><data key=\"label\">" << point_label(g, v) << "</data></node>\n";
  }
  std::size_t id = 0;
  for (auto [u, v] : g.graph.edges()) {
    out << "    <edge id=\"e" << id++ << "\" source=\"n" << u << "\" target=\"n" << v << "\"/>\n";
  }
  out << "  </graph>\n</graphml>\n";
  return out.str();
}

}  // namespace ncg
