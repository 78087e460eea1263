#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sysstruct/realization.hpp"
#include "sysstruct/structure.hpp"

namespace sysstruct {

/// Dynamical structure function (Q, P) with the carried output blocks:
///   [Y1; Y2] = [Q; C2] Y1 + [P + (I-Q) D1; D2] U
/// Rows follow the normal-form output order; output_perm maps them back.
struct DynamicalStructureFunction {
  std::size_t m = 0, p = 0, p1 = 0;
  RFMatrix Q;   // p1 x p1, zero diagonal, strictly proper
  RFMatrix P;   // p1 x m
  QMatrix C2;   // (p - p1) x p1
  QMatrix D1;   // p1 x m
  QMatrix D2;   // (p - p1) x m
  std::vector<std::size_t> output_perm;  // normal-form position -> original output
  Labels labels;

  RFMatrix qbar() const;  // [Q; C2]
  RFMatrix pbar() const;  // [P + (I-Q) D1; D2]

  /// Enforces the defining invariants (zero diagonal, strict properness).
  void validate() const;
};

/// Q = (sI - Dhat)^{-1} (W - Dhat), P = (sI - Dhat)^{-1} V with
/// W = A11 + A12 (sI - A22)^{-1} A21, V = B1 + A12 (sI - A22)^{-1} B2 and
/// Dhat the diagonal of W.
DynamicalStructureFunction dsf(const OutputNormalForm& nf);

/// Closed-loop transfer function, rows restored to the original output order.
RFMatrix dsf_transfer(const DynamicalStructureFunction& d);

/// Signal vertices are the manifest signals; edges carry the entries of
/// Pbar, Q and C2 that are nonzero.
struct SignalVertex {
  bool is_input;
  std::size_t index;  // original input/output index
  std::string name;
};

struct SignalEdge {
  std::size_t from, to;  // indices into vertices
  std::string label;

  auto operator<=>(const SignalEdge&) const = default;
};

struct SignalStructureGraph {
  std::vector<SignalVertex> vertices;  // u1..um then y1..yp (original order)
  std::vector<SignalEdge> edges;       // sorted

  bool has_edge(std::size_t from, std::size_t to) const;
};

SignalStructureGraph signal_structure_graph(const DynamicalStructureFunction& d);

std::string to_dot(const SignalStructureGraph& w);

/// Splits qbar into the intra-subsystem part (rows/columns whose outputs
/// share a subsystem under `assignment`) and the rest. `assignment` maps
/// original output indices to subsystem ids.
std::pair<RFMatrix, RFMatrix> split_q(const DynamicalStructureFunction& d,
                                      const std::vector<std::size_t>& assignment);

/// Derives the output-to-subsystem map from component membership of the
/// producing vertices; raises not_applicable when an output is not tied to
/// exactly one block.
std::vector<std::size_t> output_assignment(const SubsystemStructure& ss, const CompStructure& c);

struct RelationCheck {
  bool consistent = false;
  RFMatrix lhs;       // S [L | K], rows/columns in original output order
  RFMatrix rhs;       // (I - Qint)^{-1} [Pbar | Qext]
  RFMatrix residual;  // lhs - rhs
};

/// Exact test of S [L | K] = (I - Qint)^{-1} [Pbar | Qext]. Requires p1 = p,
/// a permutation output map and no static feedthrough in the LFT.
RelationCheck check_relation(const LftForm& lft, const DynamicalStructureFunction& d,
                             const std::vector<std::size_t>& assignment);

/// Textual (Q, P) dump mirroring the realization file layout.
std::string write_dsf(const DynamicalStructureFunction& d);

}  // namespace sysstruct
