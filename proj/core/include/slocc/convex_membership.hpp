#pragma once

#include <span>
#include <variant>
#include <vector>

namespace slocc {

struct LpProblem {
  std::vector<std::vector<double>> vertices;
  std::vector<double> query;
};

/// x -> <normal, x> + offset
struct AffineFunctional {
  std::vector<double> normal;
  double offset = 0.0;

  double operator()(std::span<const double> x) const;
};

/// Convex coefficients, one per vertex, reconstructing the query point.
struct Inside {
  std::vector<double> coefficients;
};

/// Farkas certificate: h(v) >= 0 on every vertex and h(query) < 0.
struct Outside {
  AffineFunctional separator;
};

using MembershipResult = std::variant<Inside, Outside>;

struct MembershipOptions {
  /// Largest reconstruction residual accepted as "inside".
  double feasibility_tol = 1e-10;
  double pivot_tol = 1e-12;
};

/// Decides whether `query` lies in the convex hull of `vertices` with a
/// phase-I primal simplex (Bland's rule). The returned branch always carries
/// a certificate that passes `verify_membership`.
MembershipResult convex_membership(const LpProblem& problem, const MembershipOptions& options = {});

bool is_inside(const MembershipResult& result);

/// Re-evaluates a certificate against its problem: convex coefficients must be
/// nonnegative, sum to 1 within `sum_tol` and reconstruct the query within
/// `reconstruction_tol`; a separator must be >= -`sum_tol` on all vertices and
/// strictly negative at the query.
bool verify_membership(const LpProblem& problem, const MembershipResult& result,
                       double sum_tol = 1e-10, double reconstruction_tol = 1e-9);

}  // namespace slocc
