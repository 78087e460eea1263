#pragma once

#include <string>
#include <vector>

#include "sysstruct/matrix.hpp"
#include "sysstruct/realization.hpp"

namespace sysstruct {

/// Bipartite zero/nonzero pattern of a transfer-function matrix: one edge
/// u_i -> y_j per nonzero entry G(j, i), labeled with that entry.
struct SparsityStructure {
  std::size_t m = 0, p = 0;
  struct Edge {
    std::size_t input, output;
    std::string label;

    auto operator<=>(const Edge&) const = default;
  };
  std::vector<Edge> edges;  // sorted by (input, output)
  Labels labels;

  bool has_edge(std::size_t input, std::size_t output) const;
};

/// The zero test is canonical-form equality with zero, so exact
/// cancellations are detected without any tolerance.
SparsityStructure sparsity(const RFMatrix& g, Labels labels = {});

std::string to_dot(const SparsityStructure& z);

}  // namespace sysstruct
