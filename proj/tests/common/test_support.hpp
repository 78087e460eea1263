#pragma once

// Shared fixtures and independent oracles for the unit and acceptance suites.
// Everything here deliberately avoids the library code paths it is used to
// check: the descriptor-form transfer function, cofactor determinants and
// partition enumeration are separate routes to the same answers.

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sysstruct/dsf.hpp"
#include "sysstruct/io.hpp"
#include "sysstruct/matrix.hpp"
#include "sysstruct/realization.hpp"
#include "sysstruct/structure.hpp"

namespace sysstruct::testing {

inline RationalFunction rf(const std::string& text) { return parse_rational_function(text); }

inline RFMatrix rfm(const std::vector<std::vector<std::string>>& rows) {
  RFMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rf(rows[i][j]);
  return m;
}

inline QMatrix qm(const std::vector<std::vector<long>>& rows) {
  QMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

// Transfer function straight from the differential-algebraic form:
//   G = [C Cbar] [[sI - A, -Ahat], [-Abar, I - Atil]]^{-1} [B; Bbar] + D.
// One big block inverse, no auxiliary elimination.
inline RFMatrix descriptor_tf(const GeneralizedRealization& g) {
  const std::size_t n = g.n, l = g.l;
  RFMatrix pencil(n + l, n + l);
  pencil.set_block(0, 0, s_minus(g.A));
  pencil.set_block(0, n, -lift(g.Ahat));
  pencil.set_block(n, 0, -lift(g.Abar));
  pencil.set_block(n, n, lift(QMatrix::identity(l) - g.Atil));
  const RFMatrix rhs = vstack(lift(g.B), lift(g.Bbar));
  const RFMatrix cc = hstack(lift(g.C), lift(g.Cbar));
  return cc * inverse(pencil) * rhs + lift(g.D);
}

// Cofactor (Laplace) expansion, exponential and simple; the oracle for the
// fraction-free determinant and inverse at small sizes.
inline RationalFunction cofactor_det(const RFMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return RationalFunction(Rational(1));
  if (n == 1) return m(0, 0);
  RationalFunction det;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    RFMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    const RationalFunction term = m(0, j) * cofactor_det(minor);
    det = j % 2 == 0 ? det + term : det - term;
  }
  return det;
}

inline RFMatrix adjugate_inverse(const RFMatrix& m) {
  const std::size_t n = m.rows();
  const RationalFunction det = cofactor_det(m);
  RFMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RFMatrix minor(n - 1, n - 1);
      std::size_t rr = 0;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::size_t cc = 0;
        for (std::size_t c = 0; c < n; ++c) {
          if (c == i) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      RationalFunction cof = cofactor_det(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      inv(i, j) = cof / det;
    }
  return inv;
}

// Deterministic generator of small generalized realizations. Atil is kept
// strictly lower triangular (staged auxiliary computation), so (I - Atil)
// and every principal sub-block of it stay invertible.
class RealizationGen {
 public:
  explicit RealizationGen(std::uint64_t seed) : rng_(seed) {}

  GeneralizedRealization next(std::size_t max_n = 5, std::size_t max_l = 4, std::size_t max_m = 3,
                              std::size_t max_p = 3) {
    while (true) {
      GeneralizedRealization g = candidate(max_n, max_l, max_m, max_p);
      const StateRealization minimal = minimize_intricacy(g);
      if (rank(minimal.C) >= 1) return g;
    }
  }

  std::uint64_t raw() { return rng_(); }

 private:
  GeneralizedRealization candidate(std::size_t max_n, std::size_t max_l, std::size_t max_m,
                                   std::size_t max_p) {
    GeneralizedRealization g;
    g.n = 1 + rng_() % max_n;
    g.l = rng_() % (max_l + 1);
    g.m = 1 + rng_() % max_m;
    g.p = 1 + rng_() % max_p;
    g.A = random_matrix(g.n, g.n);
    g.Ahat = random_matrix(g.n, g.l);
    g.Abar = random_matrix(g.l, g.n);
    g.Atil = QMatrix(g.l, g.l);
    for (std::size_t i = 1; i < g.l; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (rng_() % 3 == 0) g.Atil(i, j) = small_value();
    g.B = random_matrix(g.n, g.m);
    g.Bbar = random_matrix(g.l, g.m);
    g.C = random_matrix(g.p, g.n);
    g.Cbar = random_matrix(g.p, g.l);
    g.D = QMatrix(g.p, g.m);
    for (std::size_t i = 0; i < g.p && rng_() % 4 == 0; ++i)
      for (std::size_t j = 0; j < g.m; ++j)
        if (rng_() % 2 == 0) g.D(i, j) = small_value();
    // occasionally expose a state or auxiliary through an identity output row
    for (std::size_t r = 0; r < g.p; ++r) {
      if (rng_() % 2 != 0) continue;
      for (std::size_t j = 0; j < g.n; ++j) g.C(r, j) = 0;
      for (std::size_t k = 0; k < g.l; ++k) g.Cbar(r, k) = 0;
      for (std::size_t i = 0; i < g.m; ++i) g.D(r, i) = 0;
      if (g.l > 0 && rng_() % 2 == 0)
        g.Cbar(r, rng_() % g.l) = 1;
      else
        g.C(r, rng_() % g.n) = 1;
    }
    return g;
  }

  Rational small_value() {
    static const long values[] = {-3, -2, -1, 1, 2, 3};
    if (rng_() % 8 == 0) return Rational(1, 2);
    return Rational(values[rng_() % 6]);
  }

  QMatrix random_matrix(std::size_t r, std::size_t c) {
    QMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (rng_() % 2 == 0) m(i, j) = small_value();
    return m;
  }

  std::mt19937_64 rng_;
};

// Enumerates every partition of {0..n-1} (restricted growth strings) and
// hands each to the callback as a class-id vector.
inline void for_each_partition(std::size_t n,
                               const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> cls(n, 0);
  const std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t max_used) {
    if (i == n) {
      visit(cls);
      return;
    }
    for (std::size_t c = 0; c <= max_used; ++c) {
      cls[i] = c;
      rec(i + 1, c == max_used ? max_used + 1 : max_used);
    }
  };
  if (n > 0) rec(0, 0);
}

// Strong connectivity of the state-vertex subgraph of a computational
// structure (plain DFS both directions from state 0).
inline bool states_strongly_connected(const CompStructure& c) {
  const std::size_t n = c.states();
  if (n == 0) return true;
  std::vector<std::vector<std::size_t>> fwd(n), rev(n);
  for (const Edge& e : c.edges()) {
    if (c.vertex_kind(e.from) != VertexKind::State || c.vertex_kind(e.to) != VertexKind::State)
      continue;
    fwd[c.vertex_index(e.from)].push_back(c.vertex_index(e.to));
    rev[c.vertex_index(e.to)].push_back(c.vertex_index(e.from));
  }
  const auto reaches_all = [&](const std::vector<std::vector<std::size_t>>& adj) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    for (bool s : seen)
      if (!s) return false;
    return true;
  };
  return reaches_all(fwd) && reaches_all(rev);
}

inline GeneralizedRealization load_fixture(const std::string& name) {
  return parse_realization(read_file(std::string(SYSSTRUCT_CORPUS_DIR) + "/" + name));
}

}  // namespace sysstruct::testing
