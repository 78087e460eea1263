#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sysstruct/realization.hpp"

namespace sysstruct {

/// Variable families, in the global ordering used everywhere a variable list
/// must be deterministic (block inputs and outputs, DOT output, ...).
enum class VarKind { State, Aux, Input, Output };

struct Var {
  VarKind kind;
  std::size_t index;  // 0-based within the family

  auto operator<=>(const Var&) const = default;
};

std::string var_name(const Var& v, const Labels& labels);

/// Vertex families are listed in the order u, f, g, h.
enum class VertexKind { Input, State, Aux, Output };

struct Edge {
  std::size_t from, to;  // global vertex ids
  Var var;               // the variable produced by `from`

  auto operator<=>(const Edge&) const = default;
};

/// Weighted directed graph of one generalized realization: a vertex per
/// input/state/auxiliary/output mechanism, an edge wherever the target's
/// equation depends on the source's variable.
class CompStructure {
 public:
  CompStructure(std::size_t m, std::size_t n, std::size_t l, std::size_t p, Labels labels);

  std::size_t inputs() const { return m_; }
  std::size_t states() const { return n_; }
  std::size_t auxes() const { return l_; }
  std::size_t outputs() const { return p_; }
  std::size_t vertex_count() const { return m_ + n_ + l_ + p_; }

  std::size_t vertex_id(VertexKind kind, std::size_t index) const;
  VertexKind vertex_kind(std::size_t id) const;
  std::size_t vertex_index(std::size_t id) const;  // within its family
  std::string vertex_name(std::size_t id) const;

  /// The variable produced by a vertex (outputs produce y_r).
  Var produced_var(std::size_t id) const;
  /// The vertex producing a variable.
  std::size_t producer(const Var& v) const;

  void add_edge(std::size_t from, std::size_t to);
  const std::vector<Edge>& edges() const { return edges_; }
  void sort_edges();

  void mark_manifest(const Var& v) { manifest_.insert(v); }
  bool is_manifest(const Var& v) const { return manifest_.count(v) > 0; }
  const std::set<Var>& manifest_vars() const { return manifest_; }

  const Labels& labels() const { return labels_; }

 private:
  std::size_t m_, n_, l_, p_;
  std::vector<Edge> edges_;
  std::set<Var> manifest_;
  Labels labels_;
};

/// Builds the graph from the nonzero pattern of the realization; a variable
/// is manifest iff it is an input or some output row reads exactly that
/// variable with coefficient one. Raises aux_self_loop on nonzero diag(Atil).
CompStructure comp_structure(const GeneralizedRealization& g);

std::string to_dot(const CompStructure& c);

struct SubsystemComponent {
  std::vector<std::size_t> members;  // sorted vertex ids
  bool is_block = false;             // contains a state or auxiliary mechanism
  std::vector<Var> inputs;           // incoming manifest variables, global order
  std::vector<Var> outputs;          // crossing variables plus member outputs, global order
  std::optional<RFMatrix> tf;        // attached on demand
};

struct CondensedEdge {
  std::size_t from, to;  // component indices
  Var var;

  auto operator<=>(const CondensedEdge&) const = default;
};

/// Condensation of the computational structure by the unique maximal
/// admissible partition: connected components of the hidden-variable edges,
/// singletons elsewhere.
struct SubsystemStructure {
  std::vector<SubsystemComponent> components;  // ordered by smallest member
  std::vector<std::size_t> component_of;       // vertex id -> component index
  std::vector<CondensedEdge> edges;            // sorted, distinct (from,to,var) triples
  std::vector<std::size_t> blocks;             // component indices that are subsystem blocks

  std::size_t block_count() const { return blocks.size(); }
};

SubsystemStructure subsystem_structure(const CompStructure& c);

/// True iff every edge between distinct classes of the partition carries a
/// manifest variable. `component_of` maps vertex ids to class ids.
bool is_admissible(const CompStructure& c, const std::vector<std::size_t>& component_of);

/// Transfer function of one component: the sub-realization on its states and
/// auxiliaries, inputs the incoming manifest variables, outputs the crossing
/// variables and member output rows. Raises inconsistent_component when a
/// hidden edge crosses the boundary.
RFMatrix subsystem_tf(const CompStructure& c, const GeneralizedRealization& g,
                      const SubsystemComponent& comp);

void attach_block_tfs(SubsystemStructure& ss, const CompStructure& c,
                      const GeneralizedRealization& g);

/// Static interconnection N = [[F, E], [L, K]] with block-diagonal dynamics:
///   y  = F u + E w,   pi = L u + K w,   w = S pi.
/// L and K are binary selectors; E and F carry the output rows.
struct LftForm {
  std::vector<RFMatrix> s_blocks;
  std::vector<Var> pi;      // stacked block input variables
  std::vector<Var> wstack;  // stacked block output variables
  QMatrix L, K;             // |pi| x m, |pi| x |wstack|
  QMatrix output_map;       // E: p x |wstack|
  QMatrix feedthrough;      // F: p x m
  std::size_t m = 0, p = 0;

  RFMatrix block_diagonal() const;
};

/// Requires attach_block_tfs to have run.
LftForm to_lft(const SubsystemStructure& ss, const CompStructure& c,
               const GeneralizedRealization& g);

/// Closed-loop transfer function F + E (I - S K)^{-1} S L; raises
/// algebraic_loop when (I - S K) is singular.
RFMatrix lft_transfer(const LftForm& lft);

/// The computational structure with components drawn as shaded clusters.
std::string to_dot(const SubsystemStructure& ss, const CompStructure& c);
/// The condensation graph itself.
std::string to_dot_condensation(const SubsystemStructure& ss, const CompStructure& c);

}  // namespace sysstruct
