#pragma once

#include <array>
#include <vector>

#include "slocc/bell.hpp"
#include "slocc/matrix.hpp"
#include "slocc/symmetric_rep.hpp"

namespace slocc {

/// One product Kraus operator a (x) b.
struct KrausPair {
  ComplexMatrix a;
  ComplexMatrix b;

  ComplexMatrix product() const;
};

/// rho -> sum_i (A_i (x) B_i) rho (A_i (x) B_i)^dagger, scaled so that the
/// largest eigenvalue of sum_i K_i^dagger K_i is 1.
class SeparableMap {
 public:
  /// Throws DegenerateInput for an empty list or an identically zero map.
  static SeparableMap from_raw(std::vector<KrausPair> raw);

  const std::vector<KrausPair>& terms() const noexcept { return terms_; }
  /// The operators as supplied, before scaling.
  const std::vector<KrausPair>& raw_terms() const noexcept { return raw_; }
  /// terms = sqrt(scale) * raw_terms
  double scale() const noexcept { return scale_; }

  /// sum_i K_i^dagger K_i
  ComplexMatrix effect() const;
  bool is_trace_preserving(double tol = 1e-10) const;

 private:
  std::vector<KrausPair> raw_;
  std::vector<KrausPair> terms_;
  double scale_ = 1.0;
};

/// sum_i K_i rho K_i^dagger without renormalization.
ComplexMatrix kraus_action(const SeparableMap& map, const ComplexMatrix& rho);

struct MapOutput {
  ComplexMatrix state;
  double success_probability;
};

/// Throws Annihilated when the output trace is below 1e-14.
MapOutput apply_map_density(const SeparableMap& map, const ComplexMatrix& rho);

/// Choi-Jamiolkowski operator sum_i (K_i (x) I)|Omega><Omega|(K_i (x) I)^dagger
/// with unnormalized Omega, in CUT order (A_out, A_in, B_out, B_in).
ComplexMatrix cj_state(const SeparableMap& map);

/// Commutant projection of the CJ operator, normalized to unit sum.
RMatrix cj_rmatrix(const SeparableMap& map);

/// tr_in[ rho_E (I_out (x) rho^T) ] for a CUT-order CJ operator.
ComplexMatrix cj_action(const ComplexMatrix& cj, const ComplexMatrix& rho);

struct BdAction {
  WeightVector weights;        // r lambda / |r lambda|_1
  std::array<double, 4> raw;   // r lambda
  /// Success probability of the map realizing r at maximal admissible
  /// scale: |r lambda|_1 / max_j colsum_j(r).
  double success_probability;
};

/// Throws Annihilated when r lambda vanishes.
BdAction map_action_bd(const RMatrix& r, const WeightVector& lambda);

/// Product-Kraus realization of a vertex of the separable polytope. Throws
/// NotAVertex.
SeparableMap kraus_for_vertex(const RMatrix& v);

/// Kraus operators conjugated by product unitaries: (out.a K.a in.a) (x) (out.b K.b in.b).
SeparableMap conjugate_map(const SeparableMap& map, const LocalUnitary& out, const LocalUnitary& in);

/// The rank-deficient representative (product basis), 0 <= b <= 1/2.
ComplexMatrix rho_nd(double b);
/// Its quasi-distilled Bell-diagonal counterpart.
ComplexMatrix rho_nd_prime(double b);
/// Two-term product map taking rho_nd_prime(b) to rho_nd(b).
SeparableMap quasi_reverse_map(double b);

}  // namespace slocc
