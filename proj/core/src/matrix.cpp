#include "sysstruct/matrix.hpp"

#include <algorithm>

namespace sysstruct {

RFMatrix lift(const QMatrix& m) {
  RFMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = RationalFunction(m(i, j));
  return out;
}

RFMatrix s_minus(const QMatrix& m) {
  if (m.rows() != m.cols()) raise(errc::dimension_mismatch, "s_minus needs a square matrix");
  RFMatrix out = lift(m);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(i, j) = -out(i, j);
      if (i == j) out(i, j) += RationalFunction::s();
    }
  return out;
}

Echelon<Rational> rref(QMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(row, pivot);
    const Rational inv = Rational(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

QMatrix inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) raise(errc::dimension_mismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  auto ech = rref(hstack(m, QMatrix::identity(n)));
  if (ech.pivots.size() != n || (n > 0 && ech.pivots.back() >= n))
    raise(errc::singular_matrix, "rational matrix is singular");
  return ech.reduced.block(0, n, n, n);
}

QMatrix null_space(const QMatrix& m) {
  auto ech = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : ech.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  QMatrix basis(n, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], k) = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
      basis(ech.pivots[r], k) = -ech.reduced(r, free_cols[k]);
  }
  return basis;
}

namespace {

// Row-wise denominator clearing: M = diag(1/r_i) * P with P over Q[s].
struct ClearedRows {
  Matrix<Polynomial> poly;
  std::vector<Polynomial> row_factors;
};

ClearedRows clear_denominators(const RFMatrix& m) {
  Matrix<Polynomial> poly(m.rows(), m.cols());
  std::vector<Polynomial> factors(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Polynomial lcm{Rational(1)};
    for (std::size_t j = 0; j < m.cols(); ++j) lcm = poly_lcm(lcm, m(i, j).den());
    factors[i] = lcm;
    for (std::size_t j = 0; j < m.cols(); ++j)
      poly(i, j) = m(i, j).num() * poly_div_exact(lcm, m(i, j).den());
  }
  return {std::move(poly), std::move(factors)};
}

// One-step fraction-free forward elimination on the augmented matrix. All
// divisions by the previous pivot are exact in Q[s]. Returns false when a
// pivot column vanishes (singular input).
bool bareiss_forward(Matrix<Polynomial>& m, std::size_t n, int& sign) {
  Polynomial prev{Rational(1)};
  sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return false;
    // prefer the lowest-degree pivot to slow coefficient growth
    for (std::size_t i = pivot + 1; i < n; ++i)
      if (!m(i, k).is_zero() && m(i, k).degree() < m(pivot, k).degree()) pivot = i;
    if (pivot != k) {
      m.swap_rows(k, pivot);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < m.cols(); ++j)
        m(i, j) = poly_div_exact(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      m(i, k) = Polynomial();
    }
    prev = m(k, k);
  }
  return true;
}

}  // namespace

RationalFunction determinant(const RFMatrix& m) {
  if (m.rows() != m.cols()) raise(errc::dimension_mismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return RationalFunction(Rational(1));
  auto cleared = clear_denominators(m);
  int sign = 1;
  if (!bareiss_forward(cleared.poly, n, sign)) return {};
  Polynomial det_poly = cleared.poly(n - 1, n - 1);
  Polynomial den{Rational(1)};
  for (const Polynomial& r : cleared.row_factors) den = den * r;
  RationalFunction det(det_poly, den);
  return sign < 0 ? -det : det;
}

RFMatrix inverse(const RFMatrix& m) {
  if (m.rows() != m.cols()) raise(errc::dimension_mismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  auto cleared = clear_denominators(m);

  // Augment with diag(r_i) so the reduced right block is M^{-1} directly.
  Matrix<Polynomial> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = cleared.poly(i, j);
    aug(i, n + i) = cleared.row_factors[i];
  }
  int sign = 1;
  if (!bareiss_forward(aug, n, sign)) raise(errc::singular_matrix, "matrix of rational functions is singular");

  // Back substitution over the rational-function field.
  RFMatrix out(n, n);
  for (std::size_t i = n; i-- > 0;) {
    const RationalFunction pivot_inv = RationalFunction(aug(i, i)).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      RationalFunction acc{aug(i, n + j)};
      for (std::size_t k = i + 1; k < n; ++k) acc -= RationalFunction(aug(i, k)) * out(k, j);
      out(i, j) = acc * pivot_inv;
    }
  }
  return out;
}

std::string to_string(const QMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ' ';
      out += to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string to_string(const RFMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ' ';
      out += m(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

}  // namespace sysstruct
