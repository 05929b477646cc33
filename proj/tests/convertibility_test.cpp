#include <gtest/gtest.h>

#include "slocc/choi_maps.hpp"
#include "slocc/convertibility.hpp"
#include "slocc/error.hpp"
#include "slocc/separability.hpp"
#include "test_support.hpp"

using namespace slocc;

namespace {

WeightVector wv(double a, double b, double c, double d) { return WeightVector::from({a, b, c, d}); }

// Monotones evaluated directly in floating point; the oracle for the ratio form.
std::array<double, 3> plain_monotones(const WeightVector& l) {
  return {l[0], (1.0 - 2.0 * l[1]) / (l[2] + l[3]), (1.0 - 2.0 * l[1] - 2.0 * l[2]) / l[3]};
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST(monotones, worked_values) {
  auto m = monotones(wv(0.7, 0.1, 0.1, 0.1));
  EXPECT_DOUBLE_EQ(m.e1, 0.7);
  EXPECT_NEAR(m.e2.value(), 4.0, 1e-14);
  EXPECT_NEAR(m.e3.value(), 6.0, 1e-14);
  m = monotones(wv(0.6, 0.3, 0.05, 0.05));
  EXPECT_NEAR(m.e2.value(), 4.0, 1e-14);
  EXPECT_NEAR(m.e3.value(), 6.0, 1e-13);
  m = monotones(wv(1, 0, 0, 0));
  EXPECT_TRUE(m.e2.is_infinite());
  EXPECT_TRUE(m.e3.is_infinite());
  EXPECT_EQ(m.e2.num, 1.0);
  EXPECT_EQ(m.e3.num, 1.0);
}

TEST(monotones, preconditions) {
  EXPECT_EQ(code_of([] { monotones(wv(0.1, 0.7, 0.1, 0.1)); }), ErrorCode::NotOrdered);
  EXPECT_EQ(code_of([] { monotones(wv(0.5, 0.3, 0.1, 0.1)); }), ErrorCode::NotEntangled);
}

TEST(monotones, ratio_form_matches_plain_division) {
  Rng rng(1);
  for (int t = 0; t < 1000; ++t) {
    const auto l = fixtures::random_ordered_entangled(rng);
    const auto m = monotones(l);
    const auto p = plain_monotones(l);
    EXPECT_NEAR(m.e2.value(), p[1], 1e-9 * p[1]);
    EXPECT_NEAR(m.e3.value(), p[2], 1e-9 * p[2]);
  }
}

TEST(can_convert_bd, worked_examples) {
  auto d = can_convert_bd(wv(0.7, 0.1, 0.1, 0.1), wv(0.6, 0.2, 0.1, 0.1));
  EXPECT_TRUE(d.convertible);
  ASSERT_TRUE(d.map.has_value());
  const auto replay = map_action_bd(*d.map, wv(0.7, 0.1, 0.1, 0.1));
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(replay.weights[k], wv(0.6, 0.2, 0.1, 0.1)[k], 1e-10);
  EXPECT_TRUE(is_separable(*d.map).separable());

  d = can_convert_bd(wv(0.6, 0.2, 0.1, 0.1), wv(0.7, 0.1, 0.1, 0.1));
  EXPECT_FALSE(d.convertible);
  EXPECT_EQ(d.violated_monotone, 1);
  EXPECT_EQ(d.reason, "E1 violated: 0.6 < 0.7");

  d = can_convert_bd(wv(0.6, 0.3, 0.05, 0.05), wv(0.6, 0.35, 0.025, 0.025));
  EXPECT_FALSE(d.convertible);
  EXPECT_EQ(d.violated_monotone, 2);
}

TEST(can_convert_bd, is_a_preorder) {
  Rng rng(2);
  for (int t = 0; t < 300; ++t) {
    const auto a = fixtures::random_ordered_entangled(rng);
    const auto b = fixtures::random_ordered_entangled(rng);
    const auto c = fixtures::random_ordered_entangled(rng);
    EXPECT_TRUE(can_convert_bd(a, a).convertible);
    if (can_convert_bd(a, b).convertible && can_convert_bd(b, c).convertible) {
      EXPECT_TRUE(can_convert_bd(a, c).convertible);
    }
  }
}

TEST(plambda, vertex_counts) {
  EXPECT_EQ(plambda_vertices(wv(0.7, 0.1, 0.1, 0.1)).size(), 4u);
  const auto v = plambda_vertices(wv(0.55, 0.25, 0.15, 0.05));
  EXPECT_EQ(v.size(), 9u);
  for (const auto& x : v) {
    if (x.kind == PLambdaVertexKind::Permutation) {
      EXPECT_EQ(x.weights[0], 0.55);
    }
    if (x.kind == PLambdaVertexKind::Separable) {
      EXPECT_EQ(x.weights[0], 0.5);
    }
  }
}

TEST(facets, saturation_and_vertices) {
  const auto l = wv(0.7, 0.1, 0.1, 0.1);
  const auto at_self = facet_inequalities(l, l);
  EXPECT_NEAR(at_self[1].coordinate.lhs, 1.0, 1e-12);
  EXPECT_NEAR(at_self[2].coordinate.lhs, 1.0, 1e-12);
  const auto at12 = facet_inequalities(l, wv(0.5, 0.5, 0, 0));
  EXPECT_NEAR(at12[1].coordinate.lhs, 1.0, 1e-12);
  const auto l2 = wv(0.55, 0.25, 0.15, 0.05);
  for (const auto& v : plambda_vertices(l2)) {
    for (const auto& f : facet_inequalities(l2, WeightVector::from(v.weights))) {
      EXPECT_TRUE(f.weight.satisfied);
      EXPECT_TRUE(f.coordinate.satisfied);
      EXPECT_FALSE(f.coordinate.degenerate);
    }
  }
}

TEST(facets, weight_and_coordinate_forms_agree) {
  Rng rng(3);
  for (int t = 0; t < 2000; ++t) {
    const auto l = fixtures::random_ordered_entangled(rng);
    const auto lp = fixtures::random_ordered_entangled(rng);
    const auto f = facet_inequalities(l, lp);
    const auto m = plain_monotones(l), mp = plain_monotones(lp);
    EXPECT_EQ(f[0].weight.satisfied, f[0].coordinate.satisfied);
    EXPECT_NEAR(f[0].coordinate.lhs, lp[0], 1e-14);
    // Scaled coordinate-form slack equals the cross-multiplied weight form.
    EXPECT_NEAR((f[1].coordinate.lhs - 1.0) * (l[0] - l[1]) / 2.0, f[1].weight.lhs, 1e-12);
    const double d = 1.0 - 2.0 * l[1] - 2.0 * l[2];
    EXPECT_NEAR((f[2].coordinate.lhs - 1.0) * d / 4.0, f[2].weight.lhs, 1e-12);
    if (std::abs(m[1] - mp[1]) > 1e-9 * m[1]) {
      EXPECT_EQ(f[1].weight.satisfied, m[1] >= mp[1]);
    }
    if (std::abs(m[2] - mp[2]) > 1e-9 * m[2]) {
      EXPECT_EQ(f[2].weight.satisfied, m[2] >= mp[2]);
    }
  }
}

TEST(lp_oracle, agrees_with_monotones) {
  Rng rng(4);
  for (int t = 0; t < 2000; ++t) {
    const auto l = fixtures::random_ordered_entangled(rng);
    const auto lp = fixtures::random_ordered_entangled(rng);
    EXPECT_EQ(lp_oracle_membership(l, lp), can_convert_bd(l, lp).convertible) << t;
  }
}

TEST(lp_oracle, centroid_inside_and_f1_breach_outside) {
  const auto l = wv(0.7, 0.1, 0.1, 0.1);
  std::array<double, 4> c{};
  const auto verts = plambda_vertices(l);
  for (const auto& v : verts) {
    for (std::size_t k = 0; k < 4; ++k) c[k] += v.weights[k] / verts.size();
  }
  EXPECT_TRUE(lp_oracle_membership(l, WeightVector::from(c)));
  EXPECT_FALSE(lp_oracle_membership(l, wv(0.75, 0.25 / 3, 0.25 / 3, 0.25 / 3)));
}

TEST(synthesize_map, special_targets) {
  const auto l = wv(0.7, 0.1, 0.1, 0.1);
  EXPECT_LT(max_abs_diff(synthesize_map(l, l), canonical_d0()), 1e-12);
  const RMatrix r12 = synthesize_map(wv(0.6, 0.2, 0.15, 0.05), wv(0.5, 0.5, 0, 0));
  EXPECT_LT(max_abs_diff(r12, canonical_g0()), 1e-12);
  EXPECT_EQ(code_of([&] { synthesize_map(wv(0.6, 0.2, 0.1, 0.1), l); }), ErrorCode::NotConvertible);
}

TEST(synthesize_map, random_pairs_replay) {
  Rng rng(5);
  int positives = 0;
  for (int t = 0; t < 300; ++t) {
    const auto l = fixtures::random_ordered_entangled(rng);
    const auto lp = fixtures::random_ordered_entangled(rng);
    const auto d = can_convert_bd(l, lp);
    if (!d.convertible) continue;
    ++positives;
    const auto replay = map_action_bd(*d.map, l);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(replay.weights[k], lp[k], 1e-10);
    EXPECT_TRUE(d.map->is_state());
  }
  EXPECT_GT(positives, 20);
}

TEST(synthesize_map, prepare_and_frame_mapping) {
  const auto l = wv(0.1, 0.7, 0.1, 0.1);
  const auto target = wv(0.3, 0.3, 0.2, 0.2);
  const RMatrix prep = prepare_map(target);
  EXPECT_TRUE(is_separable(prep).separable());
  const auto out = map_action_bd(prep, l);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(out.weights[k], target[k], 1e-15);

  const auto src = wv(0.1, 0.1, 0.7, 0.1);
  const auto dst = wv(0.2, 0.1, 0.1, 0.6);
  const auto so = canonical_order(src), dso = canonical_order(dst);
  const auto d = can_convert_bd(so.weights, dso.weights);
  ASSERT_TRUE(d.convertible);
  const RMatrix r = to_original_frame(*d.map, so.perm, dso.perm);
  const auto replay = map_action_bd(r, src);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(replay.weights[k], dst[k], 1e-10);
}

TEST(monotonicity, vertex_maps_never_increase_monotones) {
  Rng rng(6);
  for (int t = 0; t < 50; ++t) {
    const auto l = fixtures::random_ordered_entangled(rng);
    const auto e = monotones(l);
    for (const auto& v : vertex_set()) {
      const auto out = canonical_order(map_action_bd(v.r, l).weights).weights;
      if (!is_entangled_bd(out)) continue;
      const auto f = monotones(out);
      EXPECT_GE(e.e1, f.e1 - 1e-12);
      EXPECT_TRUE(ratio_geq(e.e2, f.e2, 1e-12));
      EXPECT_TRUE(ratio_geq(e.e3, f.e3, 1e-12));
    }
  }
}
