#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "slocc/bell.hpp"
#include "slocc/symmetric_rep.hpp"

namespace slocc {

/// num / den with nonnegative parts; den == 0 means +infinity.
struct Ratio {
  double num;
  double den;

  double value() const;
  bool is_infinite() const { return den == 0.0; }
};

/// a >= b by cross-multiplication, with absolute slack `tol`.
bool ratio_geq(const Ratio& a, const Ratio& b, double tol = 1e-12);

struct MonotoneTriple {
  double e1;
  Ratio e2;  // (1 - 2 l2) / (l3 + l4)
  Ratio e3;  // (1 - 2 l2 - 2 l3) / l4
};

/// Throws NotOrdered / NotEntangled.
MonotoneTriple monotones(const WeightVector& lambda);

enum class DecisionRule { Monotones, TargetSeparable, SeparableSourceEntangledTarget };

struct ConversionDecision {
  bool convertible = false;
  DecisionRule rule = DecisionRule::Monotones;
  /// 1, 2 or 3 when a monotone increases.
  std::optional<int> violated_monotone;
  /// Unit-sum r-matrix in the separable polytope with r lambda ∝ lambda'.
  std::optional<RMatrix> map;
  std::string reason;
};

/// Both arguments ordered and entangled. Ties count as convertible. A
/// positive decision carries synthesize_map's output.
ConversionDecision can_convert_bd(const WeightVector& lambda, const WeightVector& target);

enum class PLambdaVertexKind { Permutation, Separable };

struct PLambdaVertex {
  std::array<double, 4> weights;
  PLambdaVertexKind kind;
  /// Permutation: weights[k] = lambda[perm[k]].
  Perm4 perm;
  /// Separable: weights = (e_0 + e_partner) / 2.
  std::size_t partner;
};

/// lambda, lambda_12, lambda_13, lambda_14 and the five permutations of the
/// last three weights, with exact duplicates removed.
std::vector<PLambdaVertex> plambda_vertices(const WeightVector& lambda);

struct FacetCheck {
  double lhs;
  double bound;
  bool satisfied;
  bool degenerate;
};

struct FacetForms {
  /// Cross-multiplied monotone comparison: lhs = E(lambda') side minus
  /// E(lambda) side, bound 0. F1 compares first weights.
  FacetCheck weight;
  /// The facet inequality in correlation expectations, bound 1 (F1: lambda_1).
  FacetCheck coordinate;
};

/// F1, F2, F3 of P_lambda evaluated at lambda'.
std::array<FacetForms, 3> facet_inequalities(const WeightVector& lambda, const WeightVector& target,
                                             double tol = 1e-12);

/// LP membership of lambda' in conv(plambda_vertices(lambda)).
bool lp_oracle_membership(const WeightVector& lambda, const WeightVector& target);

/// An r-matrix in the separable polytope with r lambda / |r lambda|_1 = lambda'.
/// Throws NotConvertible.
RMatrix synthesize_map(const WeightVector& lambda, const WeightVector& target);

/// Discard-and-prepare map onto a separable Bell-diagonal target.
RMatrix prepare_map(const WeightVector& target);

/// Moves an r-matrix from sorted frames back to the caller's labels, where
/// sorted weights are source[src_perm[k]] and target[dst_perm[k]].
RMatrix to_original_frame(const RMatrix& r_sorted, const Perm4& src_perm, const Perm4& dst_perm);

}  // namespace slocc
