#include "slocc/random.hpp"

#include <cmath>
#include <numbers>

namespace slocc {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phi);
  has_spare_ = true;
  return r * std::cos(phi);
}

std::size_t Rng::index(std::size_t n) {
  return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
}

std::vector<Complex> Rng::complex_gaussian(std::size_t n) {
  std::vector<Complex> v(n);
  for (auto& z : v) {
    const double re = normal();
    const double im = normal();
    z = Complex(re, im);
  }
  return v;
}

std::vector<Complex> Rng::unit_vector(std::size_t n) {
  auto v = complex_gaussian(n);
  const double nv = norm(v);
  for (auto& z : v) z /= nv;
  return v;
}

ComplexMatrix Rng::ginibre(std::size_t rows, std::size_t cols) {
  ComplexMatrix g(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double re = normal();
      const double im = normal();
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

ComplexMatrix Rng::density_matrix(std::size_t dim, std::size_t rank) {
  const ComplexMatrix g = ginibre(dim, rank);
  ComplexMatrix rho = g * g.adjoint();
  rho *= 1.0 / std::real(rho.trace());
  return rho;
}

std::array<double, 4> Rng::simplex4() {
  std::array<double, 4> w{};
  double total = 0.0;
  for (auto& x : w) {
    double u = uniform();
    while (u <= 0.0) u = uniform();
    x = -std::log(u);
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

}  // namespace slocc
