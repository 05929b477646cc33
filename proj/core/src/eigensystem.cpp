#include "slocc/eigensystem.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "slocc/error.hpp"

namespace slocc {
namespace {

constexpr std::size_t kMaxDimension = 64;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm_sq(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return s;
}

// One Hermitian Jacobi rotation zeroing a(p, q). The 2x2 block
// [[a_pp, b e], [b e*, a_qq]] is first made real by the phase diag(1, e*),
// then rotated by the classical real Jacobi rotation [[c, s], [-s, c]].
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double b = std::abs(apq);
  if (b == 0.0) return;
  const Complex e = apq / b;
  const double app = std::real(a(p, p));
  const double aqq = std::real(a(q, q));
  const double theta = (aqq - app) / (2.0 * b);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  // J = [[c, s], [-s e*, c e*]] acting on columns p, q.
  const Complex jpp = c;
  const Complex jpq = s;
  const Complex jqp = -s * std::conj(e);
  const Complex jqq = c * std::conj(e);

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {  // A <- A J
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * jpp + akq * jqp;
    a(k, q) = akp * jpq + akq * jqq;
  }
  for (std::size_t k = 0; k < n; ++k) {  // A <- J^dagger A
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = std::real(a(p, p));
  a(q, q) = std::real(a(q, q));
  for (std::size_t k = 0; k < n; ++k) {  // V <- V J
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * jpp + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * jqq;
  }
}

}  // namespace

EigenSystem hermitian_eigensystem(const ComplexMatrix& m, double hermitian_tol) {
  if (!m.is_square()) throw Error(ErrorCode::DimMismatch, "eigensystem of non-square matrix");
  if (m.rows() > kMaxDimension) {
    throw Error(ErrorCode::DimMismatch, "eigensystem limited to 64x64");
  }
  if (!m.is_hermitian(hermitian_tol)) {
    throw Error(ErrorCode::NonHermitian, "eigensystem input is not Hermitian");
  }
  const std::size_t n = m.rows();
  // Symmetrize so the rotations see an exactly Hermitian matrix.
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  double total = 0.0;
  for (const auto& z : a.data()) total += std::norm(z);
  const double target = std::max(total, 1e-300) * 1e-32;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm_sq(a) <= target) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::real(a(x, x)) < std::real(a(y, y));
  });

  EigenSystem out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = std::real(a(order[k], order[k]));
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double hermitian_tol) {
  return hermitian_eigensystem(m, hermitian_tol).values;
}

double min_eigenvalue(const ComplexMatrix& m, double hermitian_tol) {
  return hermitian_eigensystem(m, hermitian_tol).values.front();
}

ComplexMatrix hermitian_function(const ComplexMatrix& m, const std::function<double(double)>& f,
                                 double hermitian_tol) {
  const EigenSystem es = hermitian_eigensystem(m, hermitian_tol);
  const std::size_t n = m.rows();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(es.values[k]);
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = es.vectors(i, k) * fk;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(es.vectors(j, k));
    }
  }
  return out;
}

}  // namespace slocc
