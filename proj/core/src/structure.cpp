#include "sysstruct/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace sysstruct {

std::string var_name(const Var& v, const Labels& labels) {
  switch (v.kind) {
    case VarKind::State: return labels.state(v.index);
    case VarKind::Aux: return labels.aux(v.index);
    case VarKind::Input: return labels.input(v.index);
    case VarKind::Output: return labels.output(v.index);
  }
  return "?";
}

CompStructure::CompStructure(std::size_t m, std::size_t n, std::size_t l, std::size_t p, Labels labels)
    : m_(m), n_(n), l_(l), p_(p), labels_(std::move(labels)) {}

std::size_t CompStructure::vertex_id(VertexKind kind, std::size_t index) const {
  switch (kind) {
    case VertexKind::Input: return index;
    case VertexKind::State: return m_ + index;
    case VertexKind::Aux: return m_ + n_ + index;
    case VertexKind::Output: return m_ + n_ + l_ + index;
  }
  raise(errc::bad_node, "unknown vertex kind");
}

VertexKind CompStructure::vertex_kind(std::size_t id) const {
  if (id < m_) return VertexKind::Input;
  if (id < m_ + n_) return VertexKind::State;
  if (id < m_ + n_ + l_) return VertexKind::Aux;
  if (id < vertex_count()) return VertexKind::Output;
  raise(errc::bad_node, "vertex id out of range");
}

std::size_t CompStructure::vertex_index(std::size_t id) const {
  switch (vertex_kind(id)) {
    case VertexKind::Input: return id;
    case VertexKind::State: return id - m_;
    case VertexKind::Aux: return id - m_ - n_;
    case VertexKind::Output: return id - m_ - n_ - l_;
  }
  raise(errc::bad_node, "vertex id out of range");
}

std::string CompStructure::vertex_name(std::size_t id) const {
  const std::size_t k = vertex_index(id);
  switch (vertex_kind(id)) {
    case VertexKind::Input: return labels_.input(k);
    case VertexKind::State: return "f" + std::to_string(k + 1);
    case VertexKind::Aux: return "g" + std::to_string(k + 1);
    case VertexKind::Output: return "h" + std::to_string(k + 1);
  }
  return "?";
}

Var CompStructure::produced_var(std::size_t id) const {
  const std::size_t k = vertex_index(id);
  switch (vertex_kind(id)) {
    case VertexKind::Input: return {VarKind::Input, k};
    case VertexKind::State: return {VarKind::State, k};
    case VertexKind::Aux: return {VarKind::Aux, k};
    case VertexKind::Output: return {VarKind::Output, k};
  }
  raise(errc::bad_node, "vertex id out of range");
}

std::size_t CompStructure::producer(const Var& v) const {
  switch (v.kind) {
    case VarKind::Input: return vertex_id(VertexKind::Input, v.index);
    case VarKind::State: return vertex_id(VertexKind::State, v.index);
    case VarKind::Aux: return vertex_id(VertexKind::Aux, v.index);
    case VarKind::Output: return vertex_id(VertexKind::Output, v.index);
  }
  raise(errc::bad_node, "unknown variable kind");
}

void CompStructure::add_edge(std::size_t from, std::size_t to) {
  edges_.push_back({from, to, produced_var(from)});
}

void CompStructure::sort_edges() { std::sort(edges_.begin(), edges_.end()); }

namespace {

// An output row exposing exactly one state or auxiliary variable with
// coefficient one and no other dependence makes that variable manifest.
void mark_manifest_vars(const GeneralizedRealization& g, CompStructure& c) {
  for (std::size_t i = 0; i < g.m; ++i) c.mark_manifest({VarKind::Input, i});
  for (std::size_t r = 0; r < g.p; ++r) {
    std::size_t nonzero = 0;
    Var exposed{VarKind::Input, 0};
    bool unit = true;
    for (std::size_t j = 0; j < g.n; ++j)
      if (g.C(r, j) != 0) {
        ++nonzero;
        exposed = {VarKind::State, j};
        unit = unit && g.C(r, j) == 1;
      }
    for (std::size_t k = 0; k < g.l; ++k)
      if (g.Cbar(r, k) != 0) {
        ++nonzero;
        exposed = {VarKind::Aux, k};
        unit = unit && g.Cbar(r, k) == 1;
      }
    for (std::size_t i = 0; i < g.m; ++i)
      if (g.D(r, i) != 0) {
        ++nonzero;
        unit = false;
      }
    if (nonzero == 1 && unit && exposed.kind != VarKind::Input) c.mark_manifest(exposed);
  }
}

}  // namespace

CompStructure comp_structure(const GeneralizedRealization& g) {
  g.validate_dimensions();
  for (std::size_t k = 0; k < g.l; ++k)
    if (g.Atil(k, k) != 0)
      raise(errc::aux_self_loop, "auxiliary equation " + std::to_string(k + 1) + " reads itself");

  CompStructure c(g.m, g.n, g.l, g.p, g.labels);
  const auto u = [&](std::size_t i) { return c.vertex_id(VertexKind::Input, i); };
  const auto f = [&](std::size_t j) { return c.vertex_id(VertexKind::State, j); };
  const auto gx = [&](std::size_t k) { return c.vertex_id(VertexKind::Aux, k); };
  const auto h = [&](std::size_t r) { return c.vertex_id(VertexKind::Output, r); };

  for (std::size_t j = 0; j < g.n; ++j) {
    for (std::size_t i = 0; i < g.n; ++i)
      if (g.A(j, i) != 0) c.add_edge(f(i), f(j));
    for (std::size_t k = 0; k < g.l; ++k)
      if (g.Ahat(j, k) != 0) c.add_edge(gx(k), f(j));
    for (std::size_t i = 0; i < g.m; ++i)
      if (g.B(j, i) != 0) c.add_edge(u(i), f(j));
  }
  for (std::size_t k = 0; k < g.l; ++k) {
    for (std::size_t i = 0; i < g.n; ++i)
      if (g.Abar(k, i) != 0) c.add_edge(f(i), gx(k));
    for (std::size_t k2 = 0; k2 < g.l; ++k2)
      if (g.Atil(k, k2) != 0) c.add_edge(gx(k2), gx(k));
    for (std::size_t i = 0; i < g.m; ++i)
      if (g.Bbar(k, i) != 0) c.add_edge(u(i), gx(k));
  }
  for (std::size_t r = 0; r < g.p; ++r) {
    for (std::size_t j = 0; j < g.n; ++j)
      if (g.C(r, j) != 0) c.add_edge(f(j), h(r));
    for (std::size_t k = 0; k < g.l; ++k)
      if (g.Cbar(r, k) != 0) c.add_edge(gx(k), h(r));
    for (std::size_t i = 0; i < g.m; ++i)
      if (g.D(r, i) != 0) c.add_edge(u(i), h(r));
  }
  mark_manifest_vars(g, c);
  c.sort_edges();
  return c;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void merge(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

SubsystemStructure subsystem_structure(const CompStructure& c) {
  UnionFind uf(c.vertex_count());
  for (const Edge& e : c.edges())
    if (e.from != e.to && !c.is_manifest(e.var)) uf.merge(e.from, e.to);

  // components keyed by their smallest member
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t v = 0; v < c.vertex_count(); ++v) groups[uf.find(v)].push_back(v);
  std::map<std::size_t, std::vector<std::size_t>> ordered;
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    ordered[members.front()] = members;
  }

  SubsystemStructure ss;
  ss.component_of.assign(c.vertex_count(), 0);
  for (auto& [front, members] : ordered) {
    SubsystemComponent comp;
    comp.members = members;
    for (std::size_t v : members) {
      ss.component_of[v] = ss.components.size();
      const VertexKind k = c.vertex_kind(v);
      comp.is_block = comp.is_block || k == VertexKind::State || k == VertexKind::Aux;
    }
    ss.components.push_back(std::move(comp));
  }
  for (std::size_t i = 0; i < ss.components.size(); ++i)
    if (ss.components[i].is_block) ss.blocks.push_back(i);

  // condensation edges and per-component variable interfaces
  std::set<CondensedEdge> cedges;
  std::vector<std::set<Var>> in_vars(ss.components.size()), out_vars(ss.components.size());
  for (const Edge& e : c.edges()) {
    const std::size_t a = ss.component_of[e.from];
    const std::size_t b = ss.component_of[e.to];
    if (a == b) continue;
    cedges.insert({a, b, e.var});
    in_vars[b].insert(e.var);
    out_vars[a].insert(e.var);
  }
  for (std::size_t i = 0; i < ss.components.size(); ++i) {
    SubsystemComponent& comp = ss.components[i];
    comp.inputs.assign(in_vars[i].begin(), in_vars[i].end());
    comp.outputs.assign(out_vars[i].begin(), out_vars[i].end());
    for (std::size_t v : comp.members)
      if (c.vertex_kind(v) == VertexKind::Output)
        comp.outputs.push_back({VarKind::Output, c.vertex_index(v)});
  }
  ss.edges.assign(cedges.begin(), cedges.end());
  return ss;
}

bool is_admissible(const CompStructure& c, const std::vector<std::size_t>& component_of) {
  for (const Edge& e : c.edges())
    if (component_of[e.from] != component_of[e.to] && !c.is_manifest(e.var)) return false;
  return true;
}

RFMatrix subsystem_tf(const CompStructure& c, const GeneralizedRealization& g,
                      const SubsystemComponent& comp) {
  std::set<std::size_t> member_set(comp.members.begin(), comp.members.end());
  for (const Edge& e : c.edges()) {
    const bool from_in = member_set.count(e.from) > 0;
    const bool to_in = member_set.count(e.to) > 0;
    if (from_in != to_in && !c.is_manifest(e.var))
      raise(errc::inconsistent_component,
            "hidden variable " + var_name(e.var, c.labels()) + " crosses the component boundary");
  }

  std::vector<std::size_t> sx, sw;  // member state / auxiliary indices
  for (std::size_t v : comp.members) {
    switch (c.vertex_kind(v)) {
      case VertexKind::State: sx.push_back(c.vertex_index(v)); break;
      case VertexKind::Aux: sw.push_back(c.vertex_index(v)); break;
      default: break;
    }
  }

  GeneralizedRealization sub;
  sub.n = sx.size();
  sub.l = sw.size();
  sub.m = comp.inputs.size();
  sub.p = comp.outputs.size();
  sub.A = QMatrix(sub.n, sub.n);
  sub.Ahat = QMatrix(sub.n, sub.l);
  sub.Abar = QMatrix(sub.l, sub.n);
  sub.Atil = QMatrix(sub.l, sub.l);
  sub.B = QMatrix(sub.n, sub.m);
  sub.Bbar = QMatrix(sub.l, sub.m);
  sub.C = QMatrix(sub.p, sub.n);
  sub.Cbar = QMatrix(sub.p, sub.l);
  sub.D = QMatrix(sub.p, sub.m);

  const auto coupling_into_state = [&](std::size_t j, const Var& v) -> Rational {
    switch (v.kind) {
      case VarKind::Input: return g.B(j, v.index);
      case VarKind::State: return g.A(j, v.index);
      case VarKind::Aux: return g.Ahat(j, v.index);
      default: return 0;
    }
  };
  const auto coupling_into_aux = [&](std::size_t k, const Var& v) -> Rational {
    switch (v.kind) {
      case VarKind::Input: return g.Bbar(k, v.index);
      case VarKind::State: return g.Abar(k, v.index);
      case VarKind::Aux: return g.Atil(k, v.index);
      default: return 0;
    }
  };
  const auto coupling_into_output = [&](std::size_t r, const Var& v) -> Rational {
    switch (v.kind) {
      case VarKind::Input: return g.D(r, v.index);
      case VarKind::State: return g.C(r, v.index);
      case VarKind::Aux: return g.Cbar(r, v.index);
      default: return 0;
    }
  };

  for (std::size_t a = 0; a < sx.size(); ++a) {
    for (std::size_t b = 0; b < sx.size(); ++b) sub.A(a, b) = g.A(sx[a], sx[b]);
    for (std::size_t k = 0; k < sw.size(); ++k) sub.Ahat(a, k) = g.Ahat(sx[a], sw[k]);
    for (std::size_t col = 0; col < comp.inputs.size(); ++col)
      sub.B(a, col) = coupling_into_state(sx[a], comp.inputs[col]);
  }
  for (std::size_t k = 0; k < sw.size(); ++k) {
    for (std::size_t b = 0; b < sx.size(); ++b) sub.Abar(k, b) = g.Abar(sw[k], sx[b]);
    for (std::size_t k2 = 0; k2 < sw.size(); ++k2) sub.Atil(k, k2) = g.Atil(sw[k], sw[k2]);
    for (std::size_t col = 0; col < comp.inputs.size(); ++col)
      sub.Bbar(k, col) = coupling_into_aux(sw[k], comp.inputs[col]);
  }
  for (std::size_t row = 0; row < comp.outputs.size(); ++row) {
    const Var& v = comp.outputs[row];
    if (v.kind == VarKind::State) {
      for (std::size_t a = 0; a < sx.size(); ++a)
        if (sx[a] == v.index) sub.C(row, a) = 1;
    } else if (v.kind == VarKind::Aux) {
      for (std::size_t k = 0; k < sw.size(); ++k)
        if (sw[k] == v.index) sub.Cbar(row, k) = 1;
    } else if (v.kind == VarKind::Output) {
      const std::size_t r = v.index;
      for (std::size_t a = 0; a < sx.size(); ++a) sub.C(row, a) = g.C(r, sx[a]);
      for (std::size_t k = 0; k < sw.size(); ++k) sub.Cbar(row, k) = g.Cbar(r, sw[k]);
      for (std::size_t col = 0; col < comp.inputs.size(); ++col)
        sub.D(row, col) = coupling_into_output(r, comp.inputs[col]);
    }
  }

  return transfer_function(minimize_intricacy(sub));
}

void attach_block_tfs(SubsystemStructure& ss, const CompStructure& c,
                      const GeneralizedRealization& g) {
  for (std::size_t b : ss.blocks)
    if (!ss.components[b].tf) ss.components[b].tf = subsystem_tf(c, g, ss.components[b]);
}

RFMatrix LftForm::block_diagonal() const {
  const std::size_t rows = wstack.size();
  const std::size_t cols = pi.size();
  RFMatrix s(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const RFMatrix& blk : s_blocks) {
    s.set_block(r0, c0, blk);
    r0 += blk.rows();
    c0 += blk.cols();
  }
  return s;
}

LftForm to_lft(const SubsystemStructure& ss, const CompStructure& c,
               const GeneralizedRealization& g) {
  LftForm lft;
  lft.m = g.m;
  lft.p = g.p;

  for (std::size_t b : ss.blocks) {
    const SubsystemComponent& comp = ss.components[b];
    lft.s_blocks.push_back(comp.tf ? *comp.tf : subsystem_tf(c, g, comp));
    lft.pi.insert(lft.pi.end(), comp.inputs.begin(), comp.inputs.end());
    lft.wstack.insert(lft.wstack.end(), comp.outputs.begin(), comp.outputs.end());
  }

  std::map<Var, std::size_t> wpos;
  for (std::size_t i = 0; i < lft.wstack.size(); ++i) wpos[lft.wstack[i]] = i;

  lft.L = QMatrix(lft.pi.size(), g.m);
  lft.K = QMatrix(lft.pi.size(), lft.wstack.size());
  for (std::size_t row = 0; row < lft.pi.size(); ++row) {
    const Var& v = lft.pi[row];
    if (v.kind == VarKind::Input) {
      lft.L(row, v.index) = 1;
    } else {
      lft.K(row, wpos.at(v)) = 1;
    }
  }

  lft.output_map = QMatrix(g.p, lft.wstack.size());
  lft.feedthrough = QMatrix(g.p, g.m);
  for (std::size_t r = 0; r < g.p; ++r) {
    const std::size_t hv = c.vertex_id(VertexKind::Output, r);
    if (ss.components[ss.component_of[hv]].is_block) {
      lft.output_map(r, wpos.at({VarKind::Output, r})) = 1;
      continue;
    }
    // interface output node: the row reads manifest variables directly
    for (std::size_t j = 0; j < g.n; ++j)
      if (g.C(r, j) != 0) lft.output_map(r, wpos.at({VarKind::State, j})) = g.C(r, j);
    for (std::size_t k = 0; k < g.l; ++k)
      if (g.Cbar(r, k) != 0) lft.output_map(r, wpos.at({VarKind::Aux, k})) = g.Cbar(r, k);
    for (std::size_t i = 0; i < g.m; ++i) lft.feedthrough(r, i) = g.D(r, i);
  }
  return lft;
}

RFMatrix lft_transfer(const LftForm& lft) {
  const RFMatrix s = lft.block_diagonal();
  const RFMatrix sk = s * lift(lft.K);
  RFMatrix closed;
  try {
    closed = inverse(lift(QMatrix::identity(lft.wstack.size())) - sk);
  } catch (const error& e) {
    if (e.code() == errc::singular_matrix)
      raise(errc::algebraic_loop, "(I - SK) is singular");
    throw;
  }
  return lift(lft.feedthrough) + lift(lft.output_map) * closed * s * lift(lft.L);
}

namespace {

std::string dot_edge(const CompStructure& c, const Edge& e) {
  return "  \"" + c.vertex_name(e.from) + "\" -> \"" + c.vertex_name(e.to) + "\" [label=\"" +
         var_name(e.var, c.labels()) + "\"];\n";
}

}  // namespace

std::string to_dot(const CompStructure& c) {
  std::string out = "digraph C {\n  rankdir=LR;\n  node [shape=box];\n";
  for (std::size_t v = 0; v < c.vertex_count(); ++v) out += "  \"" + c.vertex_name(v) + "\";\n";
  for (const Edge& e : c.edges()) out += dot_edge(c, e);
  out += "}\n";
  return out;
}

std::string to_dot(const SubsystemStructure& ss, const CompStructure& c) {
  std::string out = "digraph S {\n  rankdir=LR;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < ss.components.size(); ++i) {
    const SubsystemComponent& comp = ss.components[i];
    if (comp.is_block) {
      out += "  subgraph cluster_" + std::to_string(i) + " {\n    style=filled;\n    fillcolor=lightgrey;\n";
      for (std::size_t v : comp.members) out += "    \"" + c.vertex_name(v) + "\";\n";
      out += "  }\n";
    } else {
      out += "  \"" + c.vertex_name(comp.members.front()) + "\";\n";
    }
  }
  for (const Edge& e : c.edges()) out += dot_edge(c, e);
  out += "}\n";
  return out;
}

std::string to_dot_condensation(const SubsystemStructure& ss, const CompStructure& c) {
  std::vector<std::string> names(ss.components.size());
  std::size_t block_no = 0;
  for (std::size_t i = 0; i < ss.components.size(); ++i) {
    if (ss.components[i].is_block)
      names[i] = "S" + std::to_string(++block_no);
    else
      names[i] = c.vertex_name(ss.components[i].members.front());
  }
  std::string out = "digraph S {\n  rankdir=LR;\n  node [shape=box];\n";
  for (const std::string& name : names) out += "  \"" + name + "\";\n";
  for (const CondensedEdge& e : ss.edges)
    out += "  \"" + names[e.from] + "\" -> \"" + names[e.to] + "\" [label=\"" +
           var_name(e.var, c.labels()) + "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace sysstruct
