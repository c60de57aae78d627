#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"
#include "tucker/borsuk.hpp"

using namespace tucker;
using testing_support::pe;

namespace {
const LinearMap kTilted{{{1.0, 0.0, 0.3}, {0.0, 1.0, 0.3}}};
}

TEST(Norms, Basics) {
  EXPECT_DOUBLE_EQ(infinity_norm(kTilted), 1.3);
  EXPECT_DOUBLE_EQ(max_norm(std::vector<double>{0.2, -0.7, 0.1}), 0.7);
  EXPECT_NEAR(max_edge_length(octahedral(2).complex), std::sqrt(2.0), 1e-12);
}

TEST(Solve, ProjectionIsDegenerate) {
  const LinearMap proj{{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}};
  try {
    solve(octahedral(2), proj, 0);
    FAIL() << "expected DegenerateSampleError";
  } catch (const DegenerateSampleError& e) {
    EXPECT_EQ(e.vertex(), pe(2, 3));
  }
}

TEST(Solve, ResidualWithinBounds) {
  const auto w = solve(octahedral(2), kTilted, 2);
  EXPECT_EQ(w.label_u + w.label_w, 0);
  ASSERT_TRUE(w.bound && w.mesh_bound && w.lipschitz);
  EXPECT_LE(w.residual, *w.bound + 1e-12);
  EXPECT_LE(*w.bound, *w.mesh_bound + 1e-12);
  EXPECT_LE(w.residual, 1.3 * w.max_edge_length + 1e-12);
  EXPECT_DOUBLE_EQ(*w.lipschitz, 1.3);
  EXPECT_EQ(w.refinements, 2);
  EXPECT_EQ(w.point.size(), 3u);
}

TEST(Solve, ResidualShrinksWithMesh) {
  std::optional<double> prev_bound;
  for (int r = 0; r <= 3; ++r) {
    const auto w = solve(octahedral(2), kTilted, r);
    if (prev_bound) {
      EXPECT_LE(w.residual, *prev_bound + 1e-12) << "r=" << r;
    }
    prev_bound = *w.mesh_bound;
  }
}

TEST(Solve, WitnessIsComplementaryEdge) {
  const auto t = refine(octahedral(2), 1);
  const auto w = solve(octahedral(2), kTilted, 1);
  EXPECT_TRUE(t.complex.contains(Simplex{w.u, w.w}));
  // f_i(u) and f_i(w) have opposite signs for i = |label|.
  const std::size_t i = static_cast<std::size_t>(std::abs(w.label_u)) - 1;
  const auto fw = kTilted(t.complex.coords(w.w));
  EXPECT_LE(w.value[i] * fw[i], 0.0);
}

TEST(Solve, SampleTable) {
  const auto t = octahedral(1);
  // f(x) = x_1 + 0.5 x_2 on the square; sampled at e1 and e2.
  SampleTable table{{{pe(1, 1), {1.0}}, {pe(1, 2), {0.5}}}};
  const auto w = solve(t, table, 0);
  EXPECT_EQ(w.label_u + w.label_w, 0);
  EXPECT_FALSE(w.bound);
  EXPECT_DOUBLE_EQ(w.residual, 0.5);
  EXPECT_THROW(solve(t, table, 1), std::invalid_argument);
}

TEST(Solve, InputErrors) {
  EXPECT_THROW(solve(octahedral(2), LinearMap{{{1, 0, 0.3}}}, 0), std::invalid_argument);
  EXPECT_THROW(solve(octahedral(2), LinearMap{{{1, 0}, {0, 1}}}, 0), std::invalid_argument);
  EXPECT_THROW(solve(octahedral(2), LinearMap{{{1, 0, NAN}, {0, 1, 0.3}}}, 0), std::invalid_argument);
  SymmetricComplex bare(1, {2, 3, 0, 1}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  HemisphereFlag flag(bare, {{{0}}, {{0, 1}, {1, 2}}});
  EXPECT_THROW(solve(Triangulation{bare, flag}, LinearMap{{{1, 0.5}}}, 0), std::invalid_argument);
}
