#include "sysstruct/gds.hpp"

#include <sstream>

#include "sysstruct/error.hpp"

namespace sysstruct {

Gds Gds::ring(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  if (n > 2) edges.emplace_back(n - 1, 0);
  Gds g = from_edges(n, edges);
  g.output_node = n == 0 ? 0 : n - 1;
  return g;
}

Gds Gds::path(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  Gds g = from_edges(n, edges);
  g.output_node = n == 0 ? 0 : n - 1;
  return g;
}

Gds Gds::from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Gds g;
  g.n = n;
  g.adjacency.assign(n, {});
  g.output_node = n == 0 ? 0 : n - 1;
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) raise(errc::bad_node, "edge endpoint out of range");
    if (a == b) continue;  // simple graph
    g.adjacency[a].insert(b);
    g.adjacency[b].insert(a);
  }
  return g;
}

namespace {

// f_i for u = i: the mod-2 product of (1 + x_j) over the closed neighborhood;
// equivalently 1 iff node i and all its neighbors read 0.
std::uint8_t update_value(const Gds& g, const GdsState& x, std::size_t i) {
  if (x[i] != 0) return 0;
  for (std::size_t j : g.adjacency[i])
    if (x[j] != 0) return 0;
  return 1;
}

void check_state(const Gds& g, const GdsState& x) {
  if (x.size() != g.n) raise(errc::dimension_mismatch, "state vector length mismatch");
}

}  // namespace

GdsState gds_step(const Gds& g, const GdsState& x, std::size_t node) {
  check_state(g, x);
  if (node < 1 || node > g.n) raise(errc::bad_node, "input node " + std::to_string(node));
  GdsState next = x;
  next[node - 1] = update_value(g, x, node - 1);
  return next;
}

GdsState gds_step_parallel(const Gds& g, const GdsState& x) {
  check_state(g, x);
  GdsState next(g.n);
  for (std::size_t i = 0; i < g.n; ++i) next[i] = update_value(g, x, i);
  return next;
}

GdsTrajectory gds_simulate(const Gds& g, GdsState x0, const std::vector<std::size_t>& inputs,
                           std::size_t steps) {
  check_state(g, x0);
  if (inputs.size() < steps) raise(errc::bad_node, "input sequence shorter than the step count");
  GdsTrajectory t;
  t.x.push_back(std::move(x0));
  for (std::size_t k = 0; k < steps; ++k) {
    t.input.push_back(inputs[k]);
    t.x.push_back(gds_step(g, t.x.back(), inputs[k]));
  }
  for (const GdsState& x : t.x) t.y.push_back(g.n == 0 ? 0 : x[g.output_node]);
  return t;
}

GdsUpdate gds_default_rule(const Gds& g) {
  return [g](const GdsState& x, std::size_t u, std::size_t i) -> std::uint8_t {
    return u == i + 1 ? update_value(g, x, i) : x[i];
  };
}

GdsDependencyGraph gds_dependency_graph(const Gds& g) {
  return gds_dependency_graph(g.n, gds_default_rule(g), g.output_node);
}

GdsDependencyGraph gds_dependency_graph(std::size_t n, const GdsUpdate& rule,
                                        std::size_t output_node) {
  if (n > 20) raise(errc::bad_node, "exhaustive dependence search limited to 20 nodes");
  GdsDependencyGraph dep;
  dep.n = n;

  const std::size_t states = std::size_t(1) << n;
  const auto decode = [&](std::size_t bits) {
    GdsState x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = (bits >> i) & 1u;
    return x;
  };

  for (std::size_t i = 0; i < n; ++i) {
    // state sources: flip x_j in every context
    for (std::size_t j = 0; j < n; ++j) {
      bool depends = false;
      for (std::size_t bits = 0; bits < states && !depends; ++bits)
        for (std::size_t u = 1; u <= n && !depends; ++u) {
          GdsState a = decode(bits);
          GdsState b = a;
          b[j] ^= 1u;
          depends = rule(a, u, i) != rule(b, u, i);
        }
      if (depends) dep.edges.insert({dep.node_vertex(j), dep.node_vertex(i)});
    }
    // the input selector
    bool depends = false;
    for (std::size_t bits = 0; bits < states && !depends; ++bits)
      for (std::size_t u1 = 1; u1 <= n && !depends; ++u1)
        for (std::size_t u2 = u1 + 1; u2 <= n && !depends; ++u2) {
          const GdsState x = decode(bits);
          depends = rule(x, u1, i) != rule(x, u2, i);
        }
    if (depends) dep.edges.insert({GdsDependencyGraph::input_vertex(), dep.node_vertex(i)});
  }
  // output read-out: y = x_out
  for (std::size_t j = 0; j < n; ++j)
    if (j == output_node) dep.edges.insert({dep.node_vertex(j), dep.output_vertex()});
  return dep;
}

std::string to_dot(const GdsDependencyGraph& dep) {
  const auto name = [&](std::size_t v) -> std::string {
    if (v == GdsDependencyGraph::input_vertex()) return "u";
    if (v == dep.output_vertex()) return "h";
    return "f" + std::to_string(v);
  };
  std::string out = "digraph D {\n  rankdir=LR;\n  node [shape=box];\n";
  out += "  \"u\";\n";
  for (std::size_t i = 0; i < dep.n; ++i) out += "  \"f" + std::to_string(i + 1) + "\";\n";
  out += "  \"h\";\n";
  for (const auto& [from, to] : dep.edges)
    out += "  \"" + name(from) + "\" -> \"" + name(to) + "\";\n";
  out += "}\n";
  return out;
}

std::string to_csv(const Gds& g, const GdsTrajectory& t) {
  std::string out = "t";
  for (std::size_t i = 0; i < g.n; ++i) out += ",x" + std::to_string(i + 1);
  out += ",u,y\n";
  for (std::size_t k = 0; k < t.x.size(); ++k) {
    out += std::to_string(k);
    for (std::size_t i = 0; i < g.n; ++i) out += "," + std::to_string(int(t.x[k][i]));
    out += ",";
    if (k < t.input.size()) out += std::to_string(t.input[k]);
    out += "," + std::to_string(int(t.y[k])) + "\n";
  }
  return out;
}

Gds parse_gds(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t n = 0;
  bool have_nodes = false;
  std::size_t output = 0;
  bool have_output = false;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key) || key[0] == '#') continue;
    if (key == "nodes") {
      if (!(ls >> n)) raise(errc::parse_error, "line " + std::to_string(line_no) + ": nodes count");
      have_nodes = true;
    } else if (key == "edge") {
      std::size_t a = 0, b = 0;
      if (!(ls >> a >> b) || a == 0 || b == 0)
        raise(errc::parse_error, "line " + std::to_string(line_no) + ": edge endpoints are 1-based");
      edges.emplace_back(a - 1, b - 1);
    } else if (key == "output") {
      if (!(ls >> output) || output == 0)
        raise(errc::parse_error, "line " + std::to_string(line_no) + ": output node is 1-based");
      have_output = true;
    } else {
      raise(errc::parse_error, "line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  if (!have_nodes) raise(errc::parse_error, "missing 'nodes' line");
  Gds g = Gds::from_edges(n, edges);
  if (have_output) {
    if (output > n) raise(errc::bad_node, "output node out of range");
    g.output_node = output - 1;
  }
  return g;
}

}  // namespace sysstruct
