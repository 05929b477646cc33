#include "slocc/normal_form.hpp"

#include <algorithm>
#include <cmath>

#include "slocc/eigensystem.hpp"
#include "slocc/error.hpp"
#include "slocc/tensor.hpp"

namespace slocc {
namespace {

constexpr std::array<std::size_t, 2> kQubits = {2, 2};

ComplexMatrix marginal(const ComplexMatrix& rho, std::size_t side) {
  const std::array<std::size_t, 1> kept = {side};
  return partial_trace(rho, kQubits, kept);
}

double marginal_deviation(const ComplexMatrix& rho) {
  const ComplexMatrix half = Complex(0.5) * ComplexMatrix::identity(2);
  return std::max(max_abs_diff(marginal(rho, 0), half), max_abs_diff(marginal(rho, 1), half));
}

void normalize_trace(ComplexMatrix& m) { m *= Complex(1.0 / m.trace().real()); }

}  // namespace

void require_density(const ComplexMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) throw Error(ErrorCode::InvalidState, "expected a 4x4 matrix");
  if (!rho.is_hermitian(1e-9)) throw Error(ErrorCode::InvalidState, "matrix is not Hermitian");
  if (std::abs(rho.trace() - Complex(1.0)) > 1e-9) throw Error(ErrorCode::InvalidState, "trace is not 1");
  if (min_eigenvalue(rho, 1e-9) < -1e-9) throw Error(ErrorCode::InvalidState, "matrix is not PSD");
}

bool is_ppt(const ComplexMatrix& rho) { return partial_transpose_min_eigenvalue(rho) >= -1e-10; }

FilterResult filter_iteration(const ComplexMatrix& rho, const FilterOptions& options) {
  require_density(rho);
  ComplexMatrix state = rho;
  const double exponent = -options.omega / 2.0;
  const ComplexMatrix id = ComplexMatrix::identity(2);
  double deviation = marginal_deviation(state);
  for (std::size_t it = 1; it <= options.max_iterations; ++it) {
    for (std::size_t side : {0u, 1u}) {
      const ComplexMatrix m = marginal(state, side);
      if (min_eigenvalue(m, 1e-9) < options.blowup) return {state, false, it, deviation};
      const ComplexMatrix f =
          hermitian_function(Complex(2.0) * m, [&](double x) { return std::pow(x, exponent); }, 1e-9);
      state = conjugate_by(side == 0 ? kron(f, id) : kron(id, f), state);
      normalize_trace(state);
    }
    deviation = marginal_deviation(state);
    if (deviation <= options.tolerance) return {state, true, it, deviation};
  }
  return {state, false, options.max_iterations, deviation};
}

NormalFormResult classify(const ComplexMatrix& rho, const FilterOptions& options) {
  require_density(rho);
  if (is_ppt(rho)) return {StateClass::Separable, std::nullopt, 0.0, 0, 0.0};
  const FilterResult f = filter_iteration(rho, options);
  if (f.converged) {
    // Maximally mixed marginals: Bell-diagonal up to local unitaries, so the
    // eigenvalues are the weights.
    std::vector<double> ev = hermitian_eigenvalues(f.state, 1e-9);
    std::array<double, 4> w{};
    for (std::size_t i = 0; i < 4; ++i) w[i] = std::max(ev[3 - i], 0.0);
    const double total = w[0] + w[1] + w[2] + w[3];
    for (double& x : w) x /= total;
    return {StateClass::BellDiagonal, WeightVector::from(w), 0.0, f.iterations, f.marginal_deviation};
  }
  const double b = std::clamp(nd_parameter(rho), 0.0, 0.5);
  return {StateClass::NDClass, WeightVector::from({0.5 + b, 0.5 - b, 0.0, 0.0}), b, f.iterations,
          f.marginal_deviation};
}

WeightVector bd_equivalent(const ComplexMatrix& rho, const FilterOptions& options) {
  const NormalFormResult r = classify(rho, options);
  if (r.state_class == StateClass::Separable) {
    throw Error(ErrorCode::SeparableInput, "separable states have no entangled Bell-diagonal representative");
  }
  return *r.lambda;
}

ConversionDecision can_convert_two_qubit(const ComplexMatrix& rho, const ComplexMatrix& target) {
  require_density(rho);
  require_density(target);
  ConversionDecision d;
  if (is_ppt(target)) {
    d.convertible = true;
    d.rule = DecisionRule::TargetSeparable;
    d.reason = "target separable";
    return d;
  }
  if (is_ppt(rho)) {
    d.rule = DecisionRule::SeparableSourceEntangledTarget;
    d.reason = "separable source cannot reach an entangled target";
    return d;
  }
  return can_convert_bd(bd_equivalent(rho), bd_equivalent(target));
}

std::array<double, 4> spin_flip_singular_values(const ComplexMatrix& rho) {
  require_density(rho);
  // rho = W W^dagger with columns sqrt(p_k) e_k; the mu_i are the singular
  // values of the complex symmetric tau = W^T (Y (x) Y) W. Working with tau
  // avoids square roots of the near-zero eigenvalues of rho rho~.
  const EigenSystem es = hermitian_eigensystem(rho, 1e-9);
  const double cutoff = 1e-13;
  std::vector<std::vector<Complex>> w;
  for (std::size_t k = 0; k < 4; ++k) {
    if (es.values[k] <= cutoff) continue;
    auto col = es.vectors.column(k);
    for (auto& x : col) x *= std::sqrt(es.values[k]);
    w.push_back(std::move(col));
  }
  const ComplexMatrix yy = kron(pauli(2), pauli(2));
  const std::size_t r = w.size();
  ComplexMatrix tau(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    const auto sy = yy * std::span<const Complex>(w[i]);
    for (std::size_t j = 0; j < r; ++j) {
      Complex acc = 0.0;
      for (std::size_t a = 0; a < 4; ++a) acc += w[j][a] * sy[a];
      tau(i, j) = acc;
    }
  }
  // Singular values of tau = A + iB are the nonnegative eigenvalues of the
  // real symmetric [[A, B], [B, -A]].
  ComplexMatrix embed(2 * r, 2 * r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const double a = 0.5 * (tau(i, j).real() + tau(j, i).real());
      const double b = 0.5 * (tau(i, j).imag() + tau(j, i).imag());
      embed(i, j) = a;
      embed(i, r + j) = b;
      embed(r + i, j) = b;
      embed(r + i, r + j) = -a;
    }
  }
  std::array<double, 4> mu{};
  if (r > 0) {
    const std::vector<double> ev = hermitian_eigenvalues(embed, 1e-9);
    for (std::size_t i = 0; i < r; ++i) mu[i] = std::max(ev[2 * r - 1 - i], 0.0);
  }
  return mu;
}

double concurrence(const ComplexMatrix& rho) {
  const auto mu = spin_flip_singular_values(rho);
  return std::max(0.0, mu[0] - mu[1] - mu[2] - mu[3]);
}

double nd_parameter(const ComplexMatrix& rho) {
  const auto mu = spin_flip_singular_values(rho);
  if (mu[0] + mu[1] <= 0.0) return 0.0;
  return 0.5 * (mu[0] - mu[1]) / (mu[0] + mu[1]);
}

std::array<std::array<double, 3>, 3> correlation_matrix(const ComplexMatrix& rho) {
  std::array<std::array<double, 3>, 3> t{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      t[i][j] = trace_of_product(rho, kron(pauli(i + 1), pauli(j + 1))).real();
    }
  }
  return t;
}

}  // namespace slocc
