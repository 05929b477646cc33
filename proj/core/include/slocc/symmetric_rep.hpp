#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "slocc/bell.hpp"
#include "slocc/matrix.hpp"
#include "slocc/tolerances.hpp"

namespace slocc {

/// 4x4 real coefficient matrix M of  sum_ij M_ij Pi_i (x) Pi_j. Used both for
/// states (nonnegative, unit sum) and for general operators such as witnesses.
class RMatrix {
 public:
  using Entries = std::array<std::array<double, 4>, 4>;

  RMatrix() = default;
  explicit RMatrix(const Entries& entries) : m_(entries) {}

  static RMatrix unit(std::size_t i, std::size_t j, double value = 1.0);

  double& operator()(std::size_t i, std::size_t j) { return m_[i][j]; }
  double operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }
  const Entries& entries() const noexcept { return m_; }

  double sum() const;
  double min() const;
  bool is_state(const Tolerances& tol = {}) const;
  RMatrix normalized() const;
  std::vector<double> flatten() const;
  static RMatrix from_flat(const std::vector<double>& values);

  /// M r (matrix-vector product on Bell weights).
  std::array<double, 4> apply(const std::array<double, 4>& w) const;
  std::array<double, 4> column_sums() const;

  RMatrix& operator+=(const RMatrix& other);
  RMatrix& operator*=(double s);

  friend bool operator==(const RMatrix&, const RMatrix&) = default;

 private:
  Entries m_{};
};

RMatrix operator+(RMatrix a, const RMatrix& b);
RMatrix operator*(double s, RMatrix m);
double max_abs_diff(const RMatrix& a, const RMatrix& b);
/// sum_ij A_ij B_ij
double pairing(const RMatrix& a, const RMatrix& b);

/// PAIRWISE: qubits A' B' A'' B''.  CUT: A' A'' | B' B''. Both big-endian.
enum class QubitOrdering { Pairwise, Cut };

/// Exchanges A'' and B' (an involution mapping one ordering to the other).
ComplexMatrix reorder_qubits(const ComplexMatrix& m16);

/// 16x16 operator  sum_ij M_ij Pi_i (x) Pi_j, the first projector on A'B'.
ComplexMatrix assemble(const RMatrix& m, QubitOrdering ordering);

/// r_ij = tr[rho (Pi_i (x) Pi_j)]. Accepts non-symmetric input (the result is
/// its twirl). Throws NonHermitian.
RMatrix project_to_commutant(const ComplexMatrix& rho, QubitOrdering ordering,
                             double hermitian_tol = 1e-12);

/// r'_ij = r_{row_perm[i], col_perm[j]}
RMatrix permute(const RMatrix& r, const Perm4& row_perm, const Perm4& col_perm);

/// Product unitary a (x) b on two qubits.
struct LocalUnitary {
  ComplexMatrix a;
  ComplexMatrix b;

  ComplexMatrix matrix() const;
  static LocalUnitary identity();
};

/// (f o g): apply g first.
LocalUnitary operator*(const LocalUnitary& f, const LocalUnitary& g);

/// Product unitary exchanging Pi_i and Pi_j and fixing the other two, for an
/// adjacent pair (0-based). UnsupportedPair otherwise.
LocalUnitary swap_factors(std::size_t i, std::size_t j);
ComplexMatrix swap_unitary(std::size_t i, std::size_t j);

/// Product unitary U with U Pi_k U^dagger = Pi_{pi[k]}, composed from
/// adjacent swaps.
LocalUnitary permutation_unitary(const Perm4& pi);

}  // namespace slocc
