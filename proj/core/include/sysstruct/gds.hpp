#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace sysstruct {

/// Sequential graph dynamical system over {0,1}: node i updates only when the
/// input names it, and then reads its closed neighborhood on the undirected
/// graph. The default rule is the mod-2 product of (1 + x_j) over that
/// neighborhood; the output reads one designated node.
struct Gds {
  std::size_t n = 0;
  std::vector<std::set<std::size_t>> adjacency;  // 0-based, simple, symmetric
  std::size_t output_node = 0;                   // 0-based

  static Gds ring(std::size_t n);
  static Gds path(std::size_t n);
  static Gds from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);
};

using GdsState = std::vector<std::uint8_t>;

/// One sequential update; `node` is 1-based as in the input alphabet.
GdsState gds_step(const Gds& g, const GdsState& x, std::size_t node);

/// Synchronous helper: every node applies its update at once.
GdsState gds_step_parallel(const Gds& g, const GdsState& x);

struct GdsTrajectory {
  std::vector<GdsState> x;         // x[0..T]
  std::vector<std::size_t> input;  // the T inputs consumed
  std::vector<std::uint8_t> y;     // y[0..T]
};

GdsTrajectory gds_simulate(const Gds& g, GdsState x0, const std::vector<std::size_t>& inputs,
                           std::size_t steps);

/// Node update family: value of node i after a step with input u (1-based).
using GdsUpdate = std::function<std::uint8_t(const GdsState& x, std::size_t u, std::size_t i)>;

/// The default mod-2 product rule as a reusable family for a given graph.
GdsUpdate gds_default_rule(const Gds& g);

/// Dependency graph by exhaustive search over all state/input assignments:
/// an edge means some fixed context in which varying the source changes the
/// target's update. Vertices are the input selector, the n node mechanisms
/// and the output read-out.
struct GdsDependencyGraph {
  std::size_t n = 0;
  // vertex ids: 0 = input, 1..n = node mechanisms, n+1 = output
  std::set<std::pair<std::size_t, std::size_t>> edges;

  static std::size_t input_vertex() { return 0; }
  std::size_t node_vertex(std::size_t i) const { return i + 1; }  // 0-based node
  std::size_t output_vertex() const { return n + 1; }

  bool has(std::size_t from, std::size_t to) const { return edges.count({from, to}) > 0; }
};

GdsDependencyGraph gds_dependency_graph(const Gds& g);

/// Exhaustive dependence for an arbitrary update family on n binary nodes;
/// the output read-out is y = x_output_node.
GdsDependencyGraph gds_dependency_graph(std::size_t n, const GdsUpdate& rule,
                                        std::size_t output_node);

std::string to_dot(const GdsDependencyGraph& dep);

/// CSV with header t,x1..xn,u,y; the u column holds the input consumed at
/// step t and is empty on the final row.
std::string to_csv(const Gds& g, const GdsTrajectory& t);

/// Edge-list format: "nodes N", "edge a b" (1-based), optional "output k".
Gds parse_gds(std::string_view text);

}  // namespace sysstruct
