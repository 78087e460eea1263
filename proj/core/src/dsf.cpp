#include "sysstruct/dsf.hpp"

#include <algorithm>

namespace sysstruct {

RFMatrix DynamicalStructureFunction::qbar() const { return vstack(Q, lift(C2)); }

RFMatrix DynamicalStructureFunction::pbar() const {
  const RFMatrix top = P + (lift(QMatrix::identity(p1)) - Q) * lift(D1);
  // y2 = C2 z1 + D2 u with z1 = y1 - D1 u, so the dependent rows see the
  // feedthrough D2 - C2 D1.
  return vstack(top, lift(D2 - C2 * D1));
}

void DynamicalStructureFunction::validate() const {
  if (p1 > p) raise(errc::dimension_mismatch, "p1 exceeds the output count");
  if (Q.rows() != p1 || Q.cols() != p1 || P.rows() != p1 || P.cols() != m)
    raise(errc::dimension_mismatch, "dsf blocks have inconsistent shapes");
  if (C2.rows() != p - p1 || D2.rows() != p - p1 || D1.rows() != p1)
    raise(errc::dimension_mismatch, "dsf output blocks have inconsistent shapes");
  for (std::size_t i = 0; i < p1; ++i) {
    if (!Q(i, i).is_zero()) raise(errc::singular_loop, "Q has a nonzero diagonal entry");
    for (std::size_t j = 0; j < p1; ++j)
      if (Q(i, j).properness() != Properness::StrictlyProper)
        raise(errc::singular_loop, "Q entry (" + std::to_string(i + 1) + "," +
                                       std::to_string(j + 1) + ") is not strictly proper");
  }
}

DynamicalStructureFunction dsf(const OutputNormalForm& nf) {
  if (nf.p1 == 0) raise(errc::no_manifest_outputs, "normal form has no independent outputs");
  const std::size_t p1 = nf.p1;

  RFMatrix w, v;
  if (nf.n == p1) {
    w = lift(nf.A11);
    v = lift(nf.B1);
  } else {
    const RFMatrix resolvent = inverse(s_minus(nf.A22));
    w = lift(nf.A11) + lift(nf.A12) * resolvent * lift(nf.A21);
    v = lift(nf.B1) + lift(nf.A12) * resolvent * lift(nf.B2);
  }

  // (sI - Dhat) is diagonal, so it inverts entrywise.
  std::vector<RationalFunction> gain(p1);
  for (std::size_t i = 0; i < p1; ++i)
    gain[i] = (RationalFunction::s() - w(i, i)).inverse();

  DynamicalStructureFunction d;
  d.m = nf.m;
  d.p = nf.p;
  d.p1 = p1;
  d.Q = RFMatrix(p1, p1);
  d.P = RFMatrix(p1, nf.m);
  for (std::size_t i = 0; i < p1; ++i) {
    for (std::size_t j = 0; j < p1; ++j)
      if (i != j) d.Q(i, j) = gain[i] * w(i, j);
    for (std::size_t j = 0; j < nf.m; ++j) d.P(i, j) = gain[i] * v(i, j);
  }
  d.C2 = nf.C2;
  d.D1 = nf.D1;
  d.D2 = nf.D2;
  d.output_perm = nf.output_perm;
  d.labels = nf.labels;
  d.validate();
  return d;
}

RFMatrix dsf_transfer(const DynamicalStructureFunction& d) {
  RFMatrix qaug(d.p, d.p);
  qaug.set_block(0, 0, d.Q);
  qaug.set_block(d.p1, 0, lift(d.C2));
  RFMatrix closed;
  try {
    closed = inverse(lift(QMatrix::identity(d.p)) - qaug);
  } catch (const error& e) {
    if (e.code() == errc::singular_matrix) raise(errc::singular_loop, "(I - Q) is singular");
    throw;
  }
  const RFMatrix g_nf = closed * d.pbar();
  RFMatrix g(d.p, d.m);
  for (std::size_t i = 0; i < d.p; ++i)
    for (std::size_t j = 0; j < d.m; ++j) g(d.output_perm[i], j) = g_nf(i, j);
  return g;
}

bool SignalStructureGraph::has_edge(std::size_t from, std::size_t to) const {
  return std::any_of(edges.begin(), edges.end(),
                     [&](const SignalEdge& e) { return e.from == from && e.to == to; });
}

SignalStructureGraph signal_structure_graph(const DynamicalStructureFunction& d) {
  SignalStructureGraph w;
  for (std::size_t i = 0; i < d.m; ++i) w.vertices.push_back({true, i, d.labels.input(i)});
  for (std::size_t r = 0; r < d.p; ++r) w.vertices.push_back({false, r, d.labels.output(r)});
  const auto uid = [&](std::size_t i) { return i; };
  const auto yid = [&](std::size_t nf_row) { return d.m + d.output_perm[nf_row]; };

  const RFMatrix pb = d.pbar();
  for (std::size_t i = 0; i < d.p; ++i)
    for (std::size_t j = 0; j < d.m; ++j)
      if (!pb(i, j).is_zero()) w.edges.push_back({uid(j), yid(i), pb(i, j).to_string()});
  for (std::size_t i = 0; i < d.p1; ++i)
    for (std::size_t j = 0; j < d.p1; ++j)
      if (!d.Q(i, j).is_zero()) w.edges.push_back({yid(j), yid(i), d.Q(i, j).to_string()});
  for (std::size_t i = 0; i + d.p1 < d.p; ++i)
    for (std::size_t j = 0; j < d.p1; ++j)
      if (d.C2(i, j) != 0) w.edges.push_back({yid(j), yid(d.p1 + i), to_string(d.C2(i, j))});
  std::sort(w.edges.begin(), w.edges.end());
  return w;
}

std::string to_dot(const SignalStructureGraph& w) {
  std::string out = "digraph W {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (const SignalVertex& v : w.vertices) out += "  \"" + v.name + "\";\n";
  for (const SignalEdge& e : w.edges)
    out += "  \"" + w.vertices[e.from].name + "\" -> \"" + w.vertices[e.to].name + "\" [label=\"" +
           e.label + "\"];\n";
  out += "}\n";
  return out;
}

std::pair<RFMatrix, RFMatrix> split_q(const DynamicalStructureFunction& d,
                                      const std::vector<std::size_t>& assignment) {
  for (std::size_t i = 0; i < d.p; ++i)
    if (d.output_perm[i] >= assignment.size())
      raise(errc::dimension_mismatch, "assignment does not cover all outputs");
  const RFMatrix qb = d.qbar();
  RFMatrix qint(qb.rows(), qb.cols());
  for (std::size_t i = 0; i < qb.rows(); ++i)
    for (std::size_t j = 0; j < qb.cols(); ++j)
      if (assignment[d.output_perm[i]] == assignment[d.output_perm[j]]) qint(i, j) = qb(i, j);
  return {qint, qb - qint};
}

std::vector<std::size_t> output_assignment(const SubsystemStructure& ss, const CompStructure& c) {
  std::vector<std::size_t> block_no(ss.components.size(), 0);
  for (std::size_t i = 0; i < ss.blocks.size(); ++i) block_no[ss.blocks[i]] = i;

  std::vector<std::size_t> assignment(c.outputs());
  for (std::size_t r = 0; r < c.outputs(); ++r) {
    const std::size_t hv = c.vertex_id(VertexKind::Output, r);
    const std::size_t comp = ss.component_of[hv];
    if (ss.components[comp].is_block) {
      assignment[r] = block_no[comp];
      continue;
    }
    std::set<std::size_t> sources;
    for (const Edge& e : c.edges())
      if (e.to == hv && ss.components[ss.component_of[e.from]].is_block)
        sources.insert(ss.component_of[e.from]);
    if (sources.size() != 1)
      raise(errc::not_applicable,
            "output " + c.labels().output(r) + " is not tied to exactly one subsystem");
    assignment[r] = block_no[*sources.begin()];
  }
  return assignment;
}

namespace {

// wstack position of each original output; requires the LFT's output map to
// be a permutation with no static feedthrough.
std::vector<std::size_t> output_to_wstack(const LftForm& lft) {
  if (!lft.feedthrough.is_zero())
    raise(errc::dimension_mismatch, "LFT has direct feedthrough; relation undefined");
  if (lft.output_map.rows() != lft.output_map.cols())
    raise(errc::dimension_mismatch, "LFT output map is not square");
  std::vector<std::size_t> pos(lft.p);
  std::vector<bool> used(lft.wstack.size(), false);
  for (std::size_t r = 0; r < lft.p; ++r) {
    std::size_t hits = 0;
    for (std::size_t w = 0; w < lft.wstack.size(); ++w)
      if (lft.output_map(r, w) != 0) {
        if (lft.output_map(r, w) != 1 || used[w])
          raise(errc::dimension_mismatch, "LFT output map is not a permutation");
        pos[r] = w;
        used[w] = true;
        ++hits;
      }
    if (hits != 1) raise(errc::dimension_mismatch, "LFT output map is not a permutation");
  }
  return pos;
}

}  // namespace

RelationCheck check_relation(const LftForm& lft, const DynamicalStructureFunction& d,
                             const std::vector<std::size_t>& assignment) {
  if (d.p1 != d.p)
    raise(errc::dimension_mismatch, "relation needs full-rank output map (p1 = p)");
  if (lft.p != d.p || lft.m != d.m)
    raise(errc::dimension_mismatch, "LFT and dsf describe different systems");
  const std::vector<std::size_t> wpos = output_to_wstack(lft);

  const RFMatrix s = lft.block_diagonal();
  const RFMatrix lhs_w = s * hstack(lift(lft.L), lift(lft.K));

  // rows by wstack position, columns (u | wstack) -> original output order
  RFMatrix lhs(d.p, d.m + d.p);
  for (std::size_t r = 0; r < d.p; ++r)
    for (std::size_t j = 0; j < d.m + d.p; ++j) {
      const std::size_t col = j < d.m ? j : d.m + wpos[j - d.m];
      lhs(r, j) = lhs_w(wpos[r], col);
    }

  auto [qint, qext] = split_q(d, assignment);
  RFMatrix closed;
  try {
    closed = inverse(lift(QMatrix::identity(d.p)) - qint);
  } catch (const error& e) {
    if (e.code() == errc::singular_matrix) raise(errc::singular_loop, "(I - Qint) is singular");
    throw;
  }
  const RFMatrix rhs_nf = closed * hstack(d.pbar(), qext);

  RFMatrix rhs(d.p, d.m + d.p);
  for (std::size_t i = 0; i < d.p; ++i)
    for (std::size_t j = 0; j < d.m + d.p; ++j) {
      const std::size_t oi = d.output_perm[i];
      if (j < d.m)
        rhs(oi, j) = rhs_nf(i, j);
      else
        rhs(oi, d.m + d.output_perm[j - d.m]) = rhs_nf(i, j);
    }

  RelationCheck check;
  check.lhs = lhs;
  check.rhs = rhs;
  check.residual = lhs - rhs;
  check.consistent = check.residual.is_zero();
  return check;
}

std::string write_dsf(const DynamicalStructureFunction& d) {
  std::string out;
  out += "p1 " + std::to_string(d.p1) + "\n";
  out += "m " + std::to_string(d.m) + "\n";
  out += "p " + std::to_string(d.p) + "\n";
  out += "yorder";
  for (std::size_t i = 0; i < d.p; ++i) out += " " + d.labels.output(d.output_perm[i]);
  out += "\nQ\n" + to_string(d.Q);
  out += "P\n" + to_string(d.P);
  out += "D1\n" + to_string(d.D1);
  if (d.p1 < d.p) {
    out += "C2\n" + to_string(d.C2);
    out += "D2\n" + to_string(d.D2);
  }
  return out;
}

}  // namespace sysstruct
