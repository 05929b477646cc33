#include "slocc/convertibility.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "slocc/choi_maps.hpp"
#include "slocc/convex_membership.hpp"
#include "slocc/error.hpp"
#include "slocc/separability.hpp"

namespace slocc {
namespace {

void require_ordered_entangled(const WeightVector& lambda) {
  if (!lambda.is_ordered()) throw Error(ErrorCode::NotOrdered, "weights must be in descending order");
  if (!is_entangled_bd(lambda)) throw Error(ErrorCode::NotEntangled, "largest weight must exceed 1/2");
}

LpProblem plambda_problem(const WeightVector& target, const std::vector<PLambdaVertex>& vertices) {
  LpProblem problem;
  for (const auto& v : vertices) problem.vertices.emplace_back(v.weights.begin(), v.weights.end());
  problem.query.assign(target.values().begin(), target.values().end());
  return problem;
}

std::string format_value(double x) {
  if (std::isinf(x)) return "inf";
  std::ostringstream out;
  out << x;
  return out.str();
}

}  // namespace

double Ratio::value() const {
  return den == 0.0 ? std::numeric_limits<double>::infinity() : num / den;
}

bool ratio_geq(const Ratio& a, const Ratio& b, double tol) {
  return a.num * b.den >= b.num * a.den - tol;
}

MonotoneTriple monotones(const WeightVector& lambda) {
  require_ordered_entangled(lambda);
  const auto& l = lambda.values();
  return {l[0], {std::max(0.0, 1.0 - 2.0 * l[1]), l[2] + l[3]},
          {std::max(0.0, 1.0 - 2.0 * l[1] - 2.0 * l[2]), l[3]}};
}

ConversionDecision can_convert_bd(const WeightVector& lambda, const WeightVector& target) {
  const MonotoneTriple e = monotones(lambda);
  const MonotoneTriple f = monotones(target);
  ConversionDecision d;
  const std::array<std::pair<double, double>, 3> values = {
      std::pair{e.e1, f.e1}, {e.e2.value(), f.e2.value()}, {e.e3.value(), f.e3.value()}};
  const std::array<bool, 3> ok = {e.e1 >= f.e1 - 1e-12, ratio_geq(e.e2, f.e2), ratio_geq(e.e3, f.e3)};
  for (int i = 0; i < 3; ++i) {
    if (!ok[i]) {
      d.violated_monotone = i + 1;
      std::ostringstream msg;
      msg << 'E' << i + 1 << " violated: " << format_value(values[i].first) << " < "
          << format_value(values[i].second);
      d.reason = msg.str();
      return d;
    }
  }
  d.convertible = true;
  d.reason = "all monotones nonincreasing";
  d.map = synthesize_map(lambda, target);
  return d;
}

std::vector<PLambdaVertex> plambda_vertices(const WeightVector& lambda) {
  require_ordered_entangled(lambda);
  static constexpr std::array<Perm4, 6> kPerms = {{
      {0, 1, 2, 3},  // lambda
      {0, 1, 3, 2},  // (34)
      {0, 2, 3, 1},  // (324)
      {0, 3, 2, 1},  // (24)
      {0, 3, 1, 2},  // (234)
      {0, 2, 1, 3},  // (23)
  }};
  std::vector<PLambdaVertex> out;
  auto add = [&](const PLambdaVertex& v) {
    for (const auto& existing : out) {
      if (existing.weights == v.weights) return;
    }
    out.push_back(v);
  };
  const auto& l = lambda.values();
  add({l, PLambdaVertexKind::Permutation, kPerms[0], 0});
  for (std::size_t i = 1; i < 4; ++i) {
    std::array<double, 4> w{};
    w[0] = 0.5;
    w[i] = 0.5;
    add({w, PLambdaVertexKind::Separable, kIdentityPerm, i});
  }
  for (std::size_t k = 1; k < kPerms.size(); ++k) {
    const Perm4& p = kPerms[k];
    add({{l[p[0]], l[p[1]], l[p[2]], l[p[3]]}, PLambdaVertexKind::Permutation, p, 0});
  }
  return out;
}

std::array<FacetForms, 3> facet_inequalities(const WeightVector& lambda, const WeightVector& target,
                                             double tol) {
  require_ordered_entangled(lambda);
  const auto& l = lambda.values();
  const auto& t = target.values();
  // Expectations <sigma_k (x) sigma_k> of the target.
  const double xx = t[0] - t[1] + t[2] - t[3];
  const double yy = -t[0] + t[1] + t[2] - t[3];
  const double zz = t[0] + t[1] - t[2] - t[3];

  std::array<FacetForms, 3> out{};
  out[0].weight = {t[0] - l[0], 0.0, t[0] - l[0] <= tol, false};
  out[0].coordinate = {(1.0 + xx - yy + zz) / 4.0, l[0], (1.0 + xx - yy + zz) / 4.0 <= l[0] + tol, false};

  const double s = l[2] + l[3];
  const double s_t = t[2] + t[3];
  const double w2 = s * (1.0 - 2.0 * t[1]) - s_t * (1.0 - 2.0 * l[1]);
  out[1].weight = {w2, 0.0, w2 <= tol, false};
  const double gap12 = l[0] - l[1];
  if (gap12 > 0.0) {
    const double lhs = s / gap12 * (xx - yy) + zz;
    out[1].coordinate = {lhs, 1.0, lhs <= 1.0 + tol, false};
  } else {
    out[1].coordinate = {std::numeric_limits<double>::quiet_NaN(), 1.0, out[1].weight.satisfied, true};
  }

  const double d = 1.0 - 2.0 * l[1] - 2.0 * l[2];
  const double w3 = l[3] * (1.0 - 2.0 * t[1] - 2.0 * t[2]) - t[3] * d;
  out[2].weight = {w3, 0.0, w3 <= tol, false};
  if (d > 0.0) {
    const double k = (1.0 - 2.0 * l[0] + 2.0 * l[3]) / d;
    const double lhs = xx + zz - k * yy;
    out[2].coordinate = {lhs, 1.0, lhs <= 1.0 + tol, false};
  } else {
    out[2].coordinate = {std::numeric_limits<double>::quiet_NaN(), 1.0, out[2].weight.satisfied, true};
  }
  return out;
}

bool lp_oracle_membership(const WeightVector& lambda, const WeightVector& target) {
  const auto vertices = plambda_vertices(lambda);
  return is_inside(convex_membership(plambda_problem(target, vertices)));
}

RMatrix synthesize_map(const WeightVector& lambda, const WeightVector& target) {
  const auto vertices = plambda_vertices(lambda);
  const MembershipResult lp = convex_membership(plambda_problem(target, vertices));
  const auto* inside = std::get_if<Inside>(&lp);
  if (inside == nullptr) {
    throw Error(ErrorCode::NotConvertible, "target lies outside the reachable polytope");
  }
  const auto& l = lambda.values();
  RMatrix r;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    const double c = inside->coefficients[k];
    if (c <= 0.0) continue;
    const auto& v = vertices[k];
    RMatrix term;
    double weight = 0.0;  // |term lambda|_1
    if (v.kind == PLambdaVertexKind::Permutation) {
      for (std::size_t i = 0; i < 4; ++i) term(i, v.perm[i]) = 0.25;
      weight = 0.25;
    } else {
      for (std::size_t i : {std::size_t{0}, v.partner}) {
        term(i, 0) = 0.25;
        term(i, 1) = 0.25;
      }
      weight = (l[0] + l[1]) / 2.0;
    }
    term *= c / weight;
    r += term;
  }
  r = r.normalized();

  const BdAction replay = map_action_bd(r, lambda);
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(replay.weights[i] - target[i]) > 1e-10) {
      throw Error(ErrorCode::InternalInconsistency, "synthesized map does not reproduce the target");
    }
  }
  if (!is_separable(r).separable()) {
    throw Error(ErrorCode::InternalInconsistency, "synthesized map is not separable");
  }
  return r;
}

RMatrix prepare_map(const WeightVector& target) {
  if (is_entangled_bd(target)) {
    throw Error(ErrorCode::NotConvertible, "prepare map needs a separable target");
  }
  RMatrix r;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = target[i] / 4.0;
  }
  return r;
}

RMatrix to_original_frame(const RMatrix& r_sorted, const Perm4& src_perm, const Perm4& dst_perm) {
  RMatrix out;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) out(dst_perm[i], src_perm[j]) = r_sorted(i, j);
  }
  return out;
}

}  // namespace slocc
