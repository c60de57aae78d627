#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"
#include "tucker/borsuk.hpp"
#include "tucker/generators.hpp"

using namespace tucker;
using testing_support::ne;
using testing_support::pe;

TEST(Octahedral, Counts) {
  const auto s1 = octahedral(1);
  EXPECT_EQ(s1.complex.vertex_count(), 4u);
  EXPECT_EQ(s1.complex.maximal_simplices().size(), 4u);
  const auto s2 = octahedral(2);
  EXPECT_EQ(s2.complex.vertex_count(), 6u);
  EXPECT_EQ(s2.complex.maximal_simplices().size(), 8u);
  for (int n = 1; n <= 5; ++n) {
    const auto t = octahedral(n);
    EXPECT_EQ(t.complex.vertex_count(), 2u * (n + 1));
    EXPECT_EQ(t.complex.maximal_simplices().size(), 1u << (n + 1));
  }
  EXPECT_THROW(octahedral(0), std::invalid_argument);
}

TEST(Octahedral, FlagLevelsOnTwoSphere) {
  const auto t = octahedral(2);
  const auto& levels = t.flag.levels();
  EXPECT_EQ(levels[0], std::vector<Simplex>{Simplex{pe(2, 1)}});
  std::vector<Simplex> h1{{pe(2, 1), pe(2, 2)}, {pe(2, 2), ne(2, 1)}};
  EXPECT_EQ(levels[1], h1);
  EXPECT_EQ(levels[2].size(), 4u);
  for (const Simplex& s : levels[2]) EXPECT_TRUE(s.contains(pe(2, 3)));
}

TEST(Octahedral, Coordinates) {
  const auto t = octahedral(3);
  ASSERT_TRUE(t.complex.has_coords());
  EXPECT_EQ(t.complex.coords(pe(3, 2)), (std::vector<double>{0, 1, 0, 0}));
  EXPECT_EQ(t.complex.coords(ne(3, 4)), (std::vector<double>{0, 0, 0, -1}));
}

TEST(Barycentric, CircleDoubles) {
  const auto t = barycentric(octahedral(1));
  EXPECT_EQ(t.complex.vertex_count(), 8u);
  EXPECT_EQ(t.complex.maximal_simplices().size(), 8u);
}

TEST(Barycentric, TopCountGrowsByFactorial) {
  const auto once = barycentric(octahedral(2));
  EXPECT_EQ(once.complex.maximal_simplices().size(), 48u);
  EXPECT_EQ(once.complex.vertex_count(), 26u);
  const auto twice = barycentric(once);
  EXPECT_EQ(twice.complex.maximal_simplices().size(), 48u * 6u);
  const auto s3 = barycentric(octahedral(3));
  EXPECT_EQ(s3.complex.maximal_simplices().size(), 16u * 24u);
}

TEST(Barycentric, OutputValidates) {
  for (int n = 1; n <= 3; ++n) {
    auto t = octahedral(n);
    for (int r = 1; r <= (n == 3 ? 1 : 2); ++r) {
      t = barycentric(t);
      EXPECT_TRUE(validate_symmetry(t.complex).ok) << "n=" << n << " r=" << r;
      const auto fr = validate_flag(t.complex, t.flag);
      EXPECT_TRUE(fr.ok) << "n=" << n << " r=" << r
                         << (fr.violations.empty() ? "" : ": " + fr.violations[0].what);
    }
  }
}

TEST(Barycentric, MeshShrinks) {
  auto t = octahedral(2);
  double prev = max_edge_length(t.complex);
  for (int r = 1; r <= 3; ++r) {
    t = barycentric(t);
    const double cur = max_edge_length(t.complex);
    EXPECT_LT(cur, prev) << "r=" << r;
    prev = cur;
  }
}

TEST(Barycentric, Deterministic) {
  const auto a = refine(octahedral(2), 2);
  const auto b = refine(octahedral(2), 2);
  EXPECT_EQ(a.complex, b.complex);
  EXPECT_EQ(a.flag.levels(), b.flag.levels());
}

TEST(Barycentric, RefusesSelfAntipodalSimplex) {
  EXPECT_THROW(barycentric(paper_tetra()), std::invalid_argument);
}

TEST(PaperTetra, Counts) {
  const auto t = paper_tetra();
  EXPECT_EQ(t.complex.simplices(0).size(), 4u);
  EXPECT_EQ(t.complex.simplices(1).size(), 6u);
  EXPECT_EQ(t.complex.simplices(2).size(), 4u);
  const auto r = validate_symmetry(t.complex);
  EXPECT_TRUE(r.ok);
  EXPECT_TRUE(r.has_antipodal_pair);
}

TEST(Generate, Dispatch) {
  EXPECT_EQ(generate({GeneratorKind::Octahedral, 2, 1}).complex.maximal_simplices().size(), 48u);
  EXPECT_EQ(generate({GeneratorKind::PaperTetra, 2, 0}).complex.vertex_count(), 4u);
  EXPECT_THROW(generate({GeneratorKind::PaperTetra, 3, 0}), std::invalid_argument);
  EXPECT_THROW(generate({GeneratorKind::Octahedral, 2, -1}), std::invalid_argument);
}
