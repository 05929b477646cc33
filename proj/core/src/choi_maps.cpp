#include "slocc/choi_maps.hpp"

#include <cmath>

#include "slocc/eigensystem.hpp"
#include "slocc/error.hpp"
#include "slocc/separability.hpp"
#include "slocc/tensor.hpp"

namespace slocc {
namespace {

constexpr double kAnnihilated = 1e-14;

void check_b(double b) {
  if (!(b >= 0.0 && b <= 0.5)) throw Error(ErrorCode::BOutOfRange, "b must lie in [0, 1/2]");
}

// Unnormalized |Omega> = sum_i |i>|i> on two qubits.
ComplexMatrix omega_projector() {
  std::vector<Complex> v = {1.0, 0.0, 0.0, 1.0};
  return ComplexMatrix::outer(v, v);
}

// A permutation sending each listed source to its target, completed by
// assigning the remaining sources to the remaining targets in order.
Perm4 completing_perm(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Perm4 p{};
  std::array<bool, 4> source_used{}, target_used{};
  for (auto [from, to] : pairs) {
    p[from] = to;
    source_used[from] = true;
    target_used[to] = true;
  }
  std::size_t next_target = 0;
  for (std::size_t from = 0; from < 4; ++from) {
    if (source_used[from]) continue;
    while (target_used[next_target]) ++next_target;
    p[from] = next_target;
    target_used[next_target] = true;
  }
  return p;
}

SeparableMap dephasing_map() {
  std::vector<KrausPair> raw;
  for (int k = 0; k < 4; ++k) raw.push_back({Complex(0.5) * pauli(k), pauli(k)});
  return SeparableMap::from_raw(std::move(raw));
}

SeparableMap block_measure_prepare_map() {
  std::vector<KrausPair> raw;
  const double s = 1.0 / std::sqrt(2.0);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      ComplexMatrix k(2, 2);
      k(a, b) = 1.0;
      raw.push_back({Complex(s) * k, k});
    }
  }
  return SeparableMap::from_raw(std::move(raw));
}

}  // namespace

ComplexMatrix KrausPair::product() const { return kron(a, b); }

SeparableMap SeparableMap::from_raw(std::vector<KrausPair> raw) {
  if (raw.empty()) throw Error(ErrorCode::DegenerateInput, "separable map needs at least one term");
  for (const auto& t : raw) {
    if (t.a.rows() != 2 || t.a.cols() != 2 || t.b.rows() != 2 || t.b.cols() != 2) {
      throw Error(ErrorCode::DimMismatch, "Kraus factors must be 2x2");
    }
  }
  SeparableMap map;
  map.raw_ = raw;
  map.terms_ = std::move(raw);
  const double top = hermitian_eigenvalues(map.effect(), 1e-9).back();
  if (top <= 0.0) throw Error(ErrorCode::DegenerateInput, "separable map is identically zero");
  map.scale_ = 1.0 / top;
  const Complex root(std::sqrt(map.scale_));
  for (auto& t : map.terms_) t.a = root * t.a;
  return map;
}

ComplexMatrix SeparableMap::effect() const {
  ComplexMatrix e(4, 4);
  for (const auto& t : terms_) {
    const ComplexMatrix k = t.product();
    e += k.adjoint() * k;
  }
  return e;
}

bool SeparableMap::is_trace_preserving(double tol) const {
  return max_abs_diff(effect(), ComplexMatrix::identity(4)) <= tol;
}

ComplexMatrix kraus_action(const SeparableMap& map, const ComplexMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) throw Error(ErrorCode::DimMismatch, "two-qubit input expected");
  ComplexMatrix out(4, 4);
  for (const auto& t : map.terms()) out += conjugate_by(t.product(), rho);
  return out;
}

MapOutput apply_map_density(const SeparableMap& map, const ComplexMatrix& rho) {
  ComplexMatrix sigma = kraus_action(map, rho);
  const double p = sigma.trace().real();
  if (p < kAnnihilated) throw Error(ErrorCode::Annihilated, "map output has vanishing trace");
  sigma *= Complex(1.0 / p);
  return {std::move(sigma), p};
}

ComplexMatrix cj_state(const SeparableMap& map) {
  const ComplexMatrix omega = omega_projector();
  const ComplexMatrix id = ComplexMatrix::identity(2);
  ComplexMatrix out(16, 16);
  for (const auto& t : map.terms()) {
    out += kron(conjugate_by(kron(t.a, id), omega), conjugate_by(kron(t.b, id), omega));
  }
  return out;
}

RMatrix cj_rmatrix(const SeparableMap& map) {
  return project_to_commutant(cj_state(map), QubitOrdering::Cut, 1e-9).normalized();
}

ComplexMatrix cj_action(const ComplexMatrix& cj, const ComplexMatrix& rho) {
  if (cj.rows() != 16 || cj.cols() != 16 || rho.rows() != 4 || rho.cols() != 4) {
    throw Error(ErrorCode::DimMismatch, "cj_action expects a 16x16 CJ operator and a 4x4 state");
  }
  static constexpr std::array<std::size_t, 4> kDims = {2, 2, 2, 2};
  static constexpr std::array<std::size_t, 4> kOutsFirst = {0, 2, 1, 3};
  static constexpr std::array<std::size_t, 1> kKeep = {0};
  static constexpr std::array<std::size_t, 2> kPairDims = {4, 4};
  const ComplexMatrix arranged = permute_subsystems(cj, kDims, kOutsFirst);
  const ComplexMatrix weighted = arranged * kron(ComplexMatrix::identity(4), rho.transpose());
  return partial_trace(weighted, kPairDims, kKeep);
}

BdAction map_action_bd(const RMatrix& r, const WeightVector& lambda) {
  const std::array<double, 4> raw = r.apply(lambda.values());
  double total = 0.0;
  for (double x : raw) total += x;
  if (!(total > kAnnihilated)) throw Error(ErrorCode::Annihilated, "r maps the weights to zero");
  std::array<double, 4> w{};
  for (std::size_t i = 0; i < 4; ++i) w[i] = raw[i] / total;
  double max_column = 0.0;
  for (double c : r.column_sums()) max_column = std::max(max_column, c);
  return {WeightVector::from(w), raw, total / max_column};
}

SeparableMap conjugate_map(const SeparableMap& map, const LocalUnitary& out, const LocalUnitary& in) {
  std::vector<KrausPair> raw;
  for (const auto& t : map.raw_terms()) {
    raw.push_back({out.a * t.a * in.a, out.b * t.b * in.b});
  }
  return SeparableMap::from_raw(std::move(raw));
}

SeparableMap kraus_for_vertex(const RMatrix& v) {
  for (const auto& vertex : vertex_set()) {
    if (max_abs_diff(vertex.r, v) > 1e-12) continue;
    if (vertex.kind == VertexKind::D0) {
      // Column j carries its single entry in row pi[j].
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t i = 0; i < 4; ++i) {
          if (v(i, j) > 0.0) pairs.emplace_back(j, i);
        }
      }
      return conjugate_map(dephasing_map(), permutation_unitary(completing_perm(pairs)),
                           LocalUnitary::identity());
    }
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 0; i < 4; ++i) {
      if (v(i, 0) + v(i, 1) + v(i, 2) + v(i, 3) > 0.0) rows.push_back(i);
      if (v(0, i) + v(1, i) + v(2, i) + v(3, i) > 0.0) cols.push_back(i);
    }
    const Perm4 into_block = completing_perm({{cols[0], 0}, {cols[1], 1}});
    const Perm4 out_of_block = completing_perm({{0, rows[0]}, {1, rows[1]}});
    return conjugate_map(block_measure_prepare_map(), permutation_unitary(out_of_block),
                         permutation_unitary(into_block));
  }
  throw Error(ErrorCode::NotAVertex, "r-matrix is not a vertex of the separable polytope");
}

ComplexMatrix rho_nd(double b) {
  check_b(b);
  ComplexMatrix m(4, 4);
  m(0, 0) = 0.5;
  m(1, 1) = 0.25;
  m(2, 2) = 0.25;
  m(1, 2) = 0.5 * b;
  m(2, 1) = 0.5 * b;
  return m;
}

ComplexMatrix rho_nd_prime(double b) {
  check_b(b);
  ComplexMatrix m(4, 4);
  m(1, 1) = 0.5;
  m(2, 2) = 0.5;
  m(1, 2) = -b;
  m(2, 1) = -b;
  return m;
}

SeparableMap quasi_reverse_map(double b) {
  check_b(b);
  const double root = std::sqrt(1.0 + 4.0 * b * b);
  const ComplexMatrix a1{{-2.0 * b + root, -0.5}, {1.0, 0.0}};
  const ComplexMatrix b1{{1.0, 0.5}, {1.0, 0.0}};
  const ComplexMatrix a2{{2.0 * b - root, 0.5}, {1.0, 0.0}};
  const ComplexMatrix b2{{1.0, 0.5}, {-1.0, 0.0}};
  return SeparableMap::from_raw({{a1, b1}, {a2, b2}});
}

}  // namespace slocc
