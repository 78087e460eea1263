#include "sysstruct/sparsity.hpp"

#include <algorithm>

namespace sysstruct {

bool SparsityStructure::has_edge(std::size_t input, std::size_t output) const {
  return std::any_of(edges.begin(), edges.end(),
                     [&](const Edge& e) { return e.input == input && e.output == output; });
}

SparsityStructure sparsity(const RFMatrix& g, Labels labels) {
  SparsityStructure z;
  z.m = g.cols();
  z.p = g.rows();
  z.labels = std::move(labels);
  for (std::size_t i = 0; i < z.m; ++i)
    for (std::size_t j = 0; j < z.p; ++j)
      if (!g(j, i).is_zero()) z.edges.push_back({i, j, g(j, i).to_string()});
  std::sort(z.edges.begin(), z.edges.end());
  return z;
}

std::string to_dot(const SparsityStructure& z) {
  std::string out = "digraph Z {\n  rankdir=LR;\n  node [shape=circle];\n";
  out += "  { rank=same;";
  for (std::size_t i = 0; i < z.m; ++i) out += " \"" + z.labels.input(i) + "\";";
  out += " }\n  { rank=same;";
  for (std::size_t j = 0; j < z.p; ++j) out += " \"" + z.labels.output(j) + "\";";
  out += " }\n";
  for (const auto& e : z.edges)
    out += "  \"" + z.labels.input(e.input) + "\" -> \"" + z.labels.output(e.output) +
           "\" [label=\"" + e.label + "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace sysstruct
