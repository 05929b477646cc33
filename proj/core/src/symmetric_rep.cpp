#include "slocc/symmetric_rep.hpp"

#include <algorithm>
#include <cmath>

#include "slocc/error.hpp"
#include "slocc/tensor.hpp"

namespace slocc {

RMatrix RMatrix::unit(std::size_t i, std::size_t j, double value) {
  RMatrix r;
  r(i, j) = value;
  return r;
}

double RMatrix::sum() const {
  double s = 0.0;
  for (const auto& row : m_) {
    for (double x : row) s += x;
  }
  return s;
}

double RMatrix::min() const {
  double lo = m_[0][0];
  for (const auto& row : m_) {
    for (double x : row) lo = std::min(lo, x);
  }
  return lo;
}

bool RMatrix::is_state(const Tolerances& tol) const {
  for (const auto& row : m_) {
    for (double x : row) {
      if (!std::isfinite(x) || x < tol.weight_nonneg) return false;
    }
  }
  return std::abs(sum() - 1.0) <= tol.equality;
}

RMatrix RMatrix::normalized() const {
  const double s = sum();
  if (!(s > 0.0)) throw Error(ErrorCode::InvalidState, "cannot normalize an r-matrix with zero sum");
  RMatrix out = *this;
  out *= 1.0 / s;
  return out;
}

std::vector<double> RMatrix::flatten() const {
  std::vector<double> v;
  v.reserve(16);
  for (const auto& row : m_) v.insert(v.end(), row.begin(), row.end());
  return v;
}

RMatrix RMatrix::from_flat(const std::vector<double>& values) {
  if (values.size() != 16) throw Error(ErrorCode::DimMismatch, "r-matrix needs 16 entries");
  RMatrix r;
  for (std::size_t k = 0; k < 16; ++k) r(k / 4, k % 4) = values[k];
  return r;
}

std::array<double, 4> RMatrix::apply(const std::array<double, 4>& w) const {
  std::array<double, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) out[i] += m_[i][j] * w[j];
  }
  return out;
}

std::array<double, 4> RMatrix::column_sums() const {
  std::array<double, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) out[j] += m_[i][j];
  }
  return out;
}

RMatrix& RMatrix::operator+=(const RMatrix& other) {
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m_[i][j] += other.m_[i][j];
  }
  return *this;
}

RMatrix& RMatrix::operator*=(double s) {
  for (auto& row : m_) {
    for (double& x : row) x *= s;
  }
  return *this;
}

RMatrix operator+(RMatrix a, const RMatrix& b) { return a += b; }
RMatrix operator*(double s, RMatrix m) { return m *= s; }

double max_abs_diff(const RMatrix& a, const RMatrix& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  }
  return d;
}

double pairing(const RMatrix& a, const RMatrix& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) s += a(i, j) * b(i, j);
  }
  return s;
}

ComplexMatrix reorder_qubits(const ComplexMatrix& m16) {
  static constexpr std::array<std::size_t, 4> dims{2, 2, 2, 2};
  static constexpr std::array<std::size_t, 4> order{0, 2, 1, 3};
  return permute_subsystems(m16, dims, order);
}

namespace {

const std::array<std::array<ComplexMatrix, 4>, 4>& pairwise_basis() {
  static const auto basis = [] {
    std::array<std::array<ComplexMatrix, 4>, 4> b;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) b[i][j] = kron(bell_projectors()[i], bell_projectors()[j]);
    }
    return b;
  }();
  return basis;
}

}  // namespace

ComplexMatrix assemble(const RMatrix& m, QubitOrdering ordering) {
  ComplexMatrix out(16, 16);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (m(i, j) == 0.0) continue;
      ComplexMatrix term = pairwise_basis()[i][j];
      term *= m(i, j);
      out += term;
    }
  }
  return ordering == QubitOrdering::Cut ? reorder_qubits(out) : out;
}

RMatrix project_to_commutant(const ComplexMatrix& rho, QubitOrdering ordering, double hermitian_tol) {
  if (rho.rows() != 16 || rho.cols() != 16) {
    throw Error(ErrorCode::DimMismatch, "project_to_commutant expects a 16x16 operator");
  }
  if (!rho.is_hermitian(hermitian_tol)) {
    throw Error(ErrorCode::NonHermitian, "project_to_commutant input is not Hermitian");
  }
  const ComplexMatrix pairwise = ordering == QubitOrdering::Cut ? reorder_qubits(rho) : rho;
  RMatrix r;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      r(i, j) = std::real(trace_of_product(pairwise, pairwise_basis()[i][j]));
    }
  }
  return r;
}

RMatrix permute(const RMatrix& r, const Perm4& row_perm, const Perm4& col_perm) {
  if (!is_permutation(row_perm) || !is_permutation(col_perm)) {
    throw Error(ErrorCode::DimMismatch, "permute needs valid 4-permutations");
  }
  RMatrix out;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) out(i, j) = r(row_perm[i], col_perm[j]);
  }
  return out;
}

ComplexMatrix LocalUnitary::matrix() const { return kron(a, b); }

LocalUnitary LocalUnitary::identity() {
  return {ComplexMatrix::identity(2), ComplexMatrix::identity(2)};
}

LocalUnitary operator*(const LocalUnitary& f, const LocalUnitary& g) {
  return {f.a * g.a, f.b * g.b};
}

LocalUnitary swap_factors(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  const double h = 1.0 / std::sqrt(2.0);
  const Complex ih(0.0, h);
  const ComplexMatrix plus{{h + ih, 0.0}, {0.0, h - ih}};   // (I + i sz)/sqrt2
  const ComplexMatrix minus{{h - ih, 0.0}, {0.0, h + ih}};  // (I - i sz)/sqrt2
  const ComplexMatrix hadamard{{h, h}, {h, -h}};            // (sx + sz)/sqrt2
  if (i == 0 && j == 1) return {plus, plus};
  if (i == 1 && j == 2) return {hadamard, hadamard};
  if (i == 2 && j == 3) return {minus, plus};
  throw Error(ErrorCode::UnsupportedPair,
              "only adjacent Bell labels can be swapped directly; compose for other pairs");
}

ComplexMatrix swap_unitary(std::size_t i, std::size_t j) { return swap_factors(i, j).matrix(); }

LocalUnitary permutation_unitary(const Perm4& pi) {
  if (!is_permutation(pi)) throw Error(ErrorCode::DimMismatch, "not a permutation");
  // Peel adjacent value transpositions off the left of sigma until it is the
  // identity; pi is then the product of the peeled swaps in order.
  Perm4 sigma = pi;
  std::vector<std::size_t> swaps;
  for (bool changed = true; changed;) {
    changed = false;
    const Perm4 where = inverse(sigma);
    for (std::size_t v = 0; v + 1 < 4; ++v) {
      if (where[v] > where[v + 1]) {
        for (auto& x : sigma) {
          if (x == v) x = v + 1;
          else if (x == v + 1) x = v;
        }
        swaps.push_back(v);
        changed = true;
        break;
      }
    }
  }
  LocalUnitary u = LocalUnitary::identity();
  for (std::size_t v : swaps) u = u * swap_factors(v, v + 1);
  return u;
}

}  // namespace slocc
