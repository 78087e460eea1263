#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sysstruct/matrix.hpp"

namespace sysstruct {

/// Display names for the four variable families. Defaults are u1.., x1..,
/// w1.., y1.. when a list is empty.
struct Labels {
  std::vector<std::string> u, x, w, y;

  std::string input(std::size_t i) const;
  std::string state(std::size_t j) const;
  std::string aux(std::size_t k) const;
  std::string output(std::size_t r) const;
};

/// Generalized state description with auxiliary variables:
///   x' = A x + Ahat w + B u
///   w  = Abar x + Atil w + Bbar u
///   y  = C x + Cbar w + D u
struct GeneralizedRealization {
  std::size_t n = 0, l = 0, m = 0, p = 0;
  QMatrix A, Ahat, Abar, Atil, B, Bbar, C, Cbar, D;
  Labels labels;

  std::size_t intricacy() const { return l; }
  void validate_dimensions() const;
};

struct StateRealization {
  std::size_t n = 0, m = 0, p = 0;
  QMatrix A, B, C, D;
  Labels labels;
};

GeneralizedRealization as_generalized(const StateRealization& r);

/// Eliminates the auxiliary variables through (I - Atil)^{-1}, yielding the
/// unique zero-intricacy realization with the same (u, x, y) solutions.
/// Raises index_not_zero when (I - Atil) is singular.
StateRealization minimize_intricacy(const GeneralizedRealization& g);

/// G = C (sI - A)^{-1} B + D, entrywise canonical.
RFMatrix transfer_function(const StateRealization& r);

/// Exact Kalman rank tests over the rationals.
bool is_controllable(const StateRealization& r);
bool is_observable(const StateRealization& r);

/// Output-coordinate normal form: outputs reordered so the first p1 rows of C
/// are independent, states reordered so C11 is invertible, then z = T x with
/// T = [[C11, C12], [0, N2^{-1}]] giving an output map [[I, 0], [C2, 0]].
struct OutputNormalForm {
  std::size_t n = 0, m = 0, p = 0, p1 = 0;
  QMatrix A11, A12, A21, A22;
  QMatrix B1, B2;
  QMatrix C2;  // (p - p1) x p1, equals C21 C11^{-1}
  QMatrix D1, D2;
  std::vector<std::size_t> output_perm;  // normal-form position -> original output
  std::vector<std::size_t> state_perm;   // normal-form position -> original state
  QMatrix T;                             // acts on the permuted state vector
  Labels labels;

  StateRealization to_state() const;
};

/// Row/column selection is the lexicographically smallest independent set
/// (greedy left to right), so the result is deterministic.
/// Raises no_manifest_outputs when rank(C) = 0.
OutputNormalForm output_normal_form(const StateRealization& r);

/// Applies a permutation given as newPosition -> oldIndex to matrix rows.
QMatrix permute_rows(const QMatrix& m, const std::vector<std::size_t>& perm);
QMatrix permute_cols(const QMatrix& m, const std::vector<std::size_t>& perm);

}  // namespace sysstruct
