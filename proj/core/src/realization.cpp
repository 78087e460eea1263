#include "sysstruct/realization.hpp"

#include <algorithm>

namespace sysstruct {

namespace {

std::string default_or(const std::vector<std::string>& names, std::size_t i, const char* prefix) {
  if (i < names.size() && !names[i].empty()) return names[i];
  return prefix + std::to_string(i + 1);
}

void require(bool ok, const std::string& what) {
  if (!ok) raise(errc::dimension_mismatch, what);
}

void check_shape(const QMatrix& m, std::size_t r, std::size_t c, const char* name) {
  require(m.rows() == r && m.cols() == c,
          std::string(name) + " must be " + std::to_string(r) + "x" + std::to_string(c) +
              ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

}  // namespace

std::string Labels::input(std::size_t i) const { return default_or(u, i, "u"); }
std::string Labels::state(std::size_t j) const { return default_or(x, j, "x"); }
std::string Labels::aux(std::size_t k) const { return default_or(w, k, "w"); }
std::string Labels::output(std::size_t r) const { return default_or(y, r, "y"); }

void GeneralizedRealization::validate_dimensions() const {
  check_shape(A, n, n, "A");
  check_shape(Ahat, n, l, "Ahat");
  check_shape(Abar, l, n, "Abar");
  check_shape(Atil, l, l, "Atil");
  check_shape(B, n, m, "B");
  check_shape(Bbar, l, m, "Bbar");
  check_shape(C, p, n, "C");
  check_shape(Cbar, p, l, "Cbar");
  check_shape(D, p, m, "D");
}

GeneralizedRealization as_generalized(const StateRealization& r) {
  GeneralizedRealization g;
  g.n = r.n;
  g.l = 0;
  g.m = r.m;
  g.p = r.p;
  g.A = r.A;
  g.B = r.B;
  g.C = r.C;
  g.D = r.D;
  g.Ahat = QMatrix(r.n, 0);
  g.Abar = QMatrix(0, r.n);
  g.Atil = QMatrix(0, 0);
  g.Bbar = QMatrix(0, r.m);
  g.Cbar = QMatrix(r.p, 0);
  g.labels = r.labels;
  return g;
}

StateRealization minimize_intricacy(const GeneralizedRealization& g) {
  g.validate_dimensions();
  StateRealization r;
  r.n = g.n;
  r.m = g.m;
  r.p = g.p;
  r.labels = g.labels;
  r.labels.w.clear();
  if (g.l == 0) {
    r.A = g.A;
    r.B = g.B;
    r.C = g.C;
    r.D = g.D;
    return r;
  }
  QMatrix resolvent;  // (I - Atil)^{-1}
  try {
    resolvent = inverse(QMatrix::identity(g.l) - g.Atil);
  } catch (const error& e) {
    if (e.code() == errc::singular_matrix)
      raise(errc::index_not_zero, "(I - Atil) is singular; differentiation index is not zero");
    throw;
  }
  const QMatrix wx = resolvent * g.Abar;  // w = wx x + wu u
  const QMatrix wu = resolvent * g.Bbar;
  r.A = g.A + g.Ahat * wx;
  r.B = g.B + g.Ahat * wu;
  r.C = g.C + g.Cbar * wx;
  r.D = g.D + g.Cbar * wu;
  return r;
}

RFMatrix transfer_function(const StateRealization& r) {
  return lift(r.C) * inverse(s_minus(r.A)) * lift(r.B) + lift(r.D);
}

bool is_controllable(const StateRealization& r) {
  QMatrix kalman = r.B;
  QMatrix power = r.B;
  for (std::size_t k = 1; k < r.n; ++k) {
    power = r.A * power;
    kalman = hstack(kalman, power);
  }
  return rank(kalman) == r.n;
}

bool is_observable(const StateRealization& r) {
  QMatrix kalman = r.C;
  QMatrix power = r.C;
  for (std::size_t k = 1; k < r.n; ++k) {
    power = power * r.A;
    kalman = vstack(kalman, power);
  }
  return rank(kalman) == r.n;
}

QMatrix permute_rows(const QMatrix& m, const std::vector<std::size_t>& perm) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(perm[i], j);
  return out;
}

QMatrix permute_cols(const QMatrix& m, const std::vector<std::size_t>& perm) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, perm[j]);
  return out;
}

namespace {

// Greedy left-to-right selection of independent rows: the lexicographically
// smallest index set whose rows span the row space.
std::vector<std::size_t> greedy_independent_rows(const QMatrix& m) {
  std::vector<std::size_t> selected;
  QMatrix acc(0, m.cols());
  std::size_t current_rank = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    QMatrix cand = acc.rows() == 0 ? m.block(i, 0, 1, m.cols()) : vstack(acc, m.block(i, 0, 1, m.cols()));
    if (rank(cand) > current_rank) {
      acc = cand;
      ++current_rank;
      selected.push_back(i);
    }
  }
  return selected;
}

std::vector<std::size_t> complete_permutation(std::vector<std::size_t> chosen, std::size_t total) {
  std::vector<bool> used(total, false);
  for (std::size_t i : chosen) used[i] = true;
  for (std::size_t i = 0; i < total; ++i)
    if (!used[i]) chosen.push_back(i);
  return chosen;
}

}  // namespace

StateRealization OutputNormalForm::to_state() const {
  StateRealization r;
  r.n = n;
  r.m = m;
  r.p = p;
  QMatrix a(n, n), b(n, m), c(p, n), d(p, m);
  a.set_block(0, 0, A11);
  a.set_block(0, p1, A12);
  a.set_block(p1, 0, A21);
  a.set_block(p1, p1, A22);
  b.set_block(0, 0, B1);
  b.set_block(p1, 0, B2);
  c.set_block(0, 0, QMatrix::identity(p1));
  c.set_block(p1, 0, C2);
  d.set_block(0, 0, D1);
  d.set_block(p1, 0, D2);
  r.A = a;
  r.B = b;
  r.C = c;
  r.D = d;
  r.labels = labels;
  return r;
}

OutputNormalForm output_normal_form(const StateRealization& r) {
  const std::size_t n = r.n, m = r.m, p = r.p;
  const std::vector<std::size_t> out_sel = greedy_independent_rows(r.C);
  const std::size_t p1 = out_sel.size();
  if (p1 == 0) raise(errc::no_manifest_outputs, "output matrix has rank zero");

  OutputNormalForm nf;
  nf.n = n;
  nf.m = m;
  nf.p = p;
  nf.p1 = p1;
  nf.labels = r.labels;
  nf.output_perm = complete_permutation(out_sel, p);

  // Column selection works on the selected rows only; the greedy column set
  // depends just on the row set, not its order.
  QMatrix c_sel(p1, n);
  for (std::size_t i = 0; i < p1; ++i)
    for (std::size_t j = 0; j < n; ++j) c_sel(i, j) = r.C(out_sel[i], j);
  const std::vector<std::size_t> col_sel = greedy_independent_rows(c_sel.transpose());
  if (col_sel.size() != p1) raise(errc::singular_matrix, "no invertible C11 sub-block");
  nf.state_perm = complete_permutation(col_sel, n);

  const QMatrix cp = permute_cols(permute_rows(r.C, nf.output_perm), nf.state_perm);
  const QMatrix ap = permute_cols(permute_rows(r.A, nf.state_perm), nf.state_perm);
  const QMatrix bp = permute_rows(r.B, nf.state_perm);
  const QMatrix dp = permute_rows(r.D, nf.output_perm);

  const QMatrix c11 = cp.block(0, 0, p1, p1);
  const QMatrix c12 = cp.block(0, p1, p1, n - p1);
  const QMatrix c21 = cp.block(p1, 0, p - p1, p1);
  const QMatrix c11_inv = inverse(c11);

  // The null-space basis from the reduced row echelon form has N2 = I, so
  // T = [[C11, C12], [0, I]].
  QMatrix t = QMatrix::identity(n);
  t.set_block(0, 0, c11);
  t.set_block(0, p1, c12);
  QMatrix t_inv = QMatrix::identity(n);
  t_inv.set_block(0, 0, c11_inv);
  t_inv.set_block(0, p1, -(c11_inv * c12));
  nf.T = t;

  const QMatrix at = t * ap * t_inv;
  const QMatrix bt = t * bp;
  nf.A11 = at.block(0, 0, p1, p1);
  nf.A12 = at.block(0, p1, p1, n - p1);
  nf.A21 = at.block(p1, 0, n - p1, p1);
  nf.A22 = at.block(p1, p1, n - p1, n - p1);
  nf.B1 = bt.block(0, 0, p1, m);
  nf.B2 = bt.block(p1, 0, n - p1, m);
  nf.C2 = c21 * c11_inv;
  nf.D1 = dp.block(0, 0, p1, m);
  nf.D2 = dp.block(p1, 0, p - p1, m);

  // The transformed output map must be exactly [[I, 0], [C2, 0]].
  const QMatrix ct = permute_rows(r.C, nf.output_perm);
  QMatrix expect(p, n);
  expect.set_block(0, 0, QMatrix::identity(p1));
  expect.set_block(p1, 0, nf.C2);
  if (!(permute_cols(ct, nf.state_perm) * t_inv == expect))
    raise(errc::singular_matrix, "normal form construction failed");
  return nf;
}

}  // namespace sysstruct
