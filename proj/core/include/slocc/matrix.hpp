#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace slocc {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Sized for the small operators used here
/// (at most 64x64), so every operation is a plain loop.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
  static ComplexMatrix diagonal(std::span<const double> values);
  /// |v><w|
  static ComplexMatrix outer(std::span<const Complex> v, std::span<const Complex> w);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }

  std::vector<Complex> column(std::size_t c) const;

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;
  double max_abs() const;

  /// max |M - M^dagger| <= tol
  bool is_hermitian(double tol) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
std::vector<Complex> operator*(const ComplexMatrix& m, std::span<const Complex> v);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// tr(A B) without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// A M A^dagger
ComplexMatrix conjugate_by(const ComplexMatrix& a, const ComplexMatrix& m);

Complex inner(std::span<const Complex> v, std::span<const Complex> w);
double norm(std::span<const Complex> v);

/// Pauli matrices; index 0 is the identity.
const ComplexMatrix& pauli(int k);

}  // namespace slocc
