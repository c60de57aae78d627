#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"
#include "tucker/complex.hpp"
#include "tucker/generators.hpp"

using namespace tucker;

TEST(SymmetricComplex, AntipodeOfSimplex) {
  const auto t = octahedral(2);
  EXPECT_EQ(antipode_simplex(t.complex, Simplex{0, 1, 2}), (Simplex{3, 4, 5}));
  EXPECT_EQ(antipode_simplex(t.complex, Simplex{0, 4}), (Simplex{1, 3}));
  for (int d = 0; d <= 2; ++d)
    for (const Simplex& s : t.complex.simplices(d))
      EXPECT_EQ(antipode_simplex(t.complex, antipode_simplex(t.complex, s)), s);
}

TEST(SymmetricComplex, ClosureCounts) {
  const auto t = octahedral(2);
  EXPECT_EQ(t.complex.simplices(0).size(), 6u);
  EXPECT_EQ(t.complex.simplices(1).size(), 12u);
  EXPECT_EQ(t.complex.simplices(2).size(), 8u);
  EXPECT_EQ(t.complex.closure_size(), 26u);
  EXPECT_TRUE(t.complex.contains(Simplex{0, 1}));
  EXPECT_FALSE(t.complex.contains(Simplex{0, 3}));
}

TEST(SymmetricComplex, RejectsMalformedShape) {
  EXPECT_THROW(SymmetricComplex(0, {1, 0}, {Simplex{0}}), std::invalid_argument);
  EXPECT_THROW(SymmetricComplex(1, {1, 0}, {Simplex{0, 2}}), std::invalid_argument);
  EXPECT_THROW(SymmetricComplex(2, {1, 0}, {Simplex{0, 1}}), std::invalid_argument);
  EXPECT_THROW(SymmetricComplex(1, {2, 3, 0, 1}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}},
                                std::vector<std::vector<double>>{{1, 0}, {0, 1}, {-1, 0}}),
               std::invalid_argument);
}

TEST(ValidateSymmetry, OctahedralPasses) {
  for (int n = 1; n <= 4; ++n) {
    const auto t = octahedral(n);
    const auto r = validate_symmetry(t.complex);
    EXPECT_TRUE(r.ok) << "n=" << n;
    EXPECT_FALSE(r.has_antipodal_pair);
    EXPECT_FALSE(r.has_self_antipodal);
  }
}

TEST(ValidateSymmetry, TetraFlagsAntipodalPairs) {
  const auto t = paper_tetra();
  const auto r = validate_symmetry(t.complex);
  EXPECT_TRUE(r.ok);
  EXPECT_TRUE(r.has_antipodal_pair);
  EXPECT_TRUE(r.has_self_antipodal);
  std::vector<Simplex> want{{0, 2}, {1, 3}};
  EXPECT_EQ(r.antipodal_pair_edges, want);
  // Both diagonal edges are their own images.
  for (const Simplex& e : want)
    EXPECT_NE(std::find(r.self_antipodal_simplices.begin(), r.self_antipodal_simplices.end(), e),
              r.self_antipodal_simplices.end());
}

TEST(ValidateSymmetry, FixedPoint) {
  SymmetricComplex k(1, {0, 3, 2, 1}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const auto r = validate_symmetry(k);
  EXPECT_FALSE(r.ok);
  ASSERT_FALSE(r.violations.empty());
  EXPECT_NE(r.violations.front().find("fixed point"), std::string::npos);
}

TEST(ValidateSymmetry, NotAnInvolution) {
  SymmetricComplex k(1, {1, 2, 3, 0}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EXPECT_FALSE(validate_symmetry(k).ok);
}

TEST(ValidateSymmetry, MissingAntipodalSimplex) {
  // Square with antipode 0<->2, 1<->3 but a diagonal triangle fan would break
  // manifoldness; here we drop the image of {0,1} by using a pentagon.
  SymmetricComplex k(1, {2, 3, 0, 1, 5, 4}, {{0, 1}, {1, 2}, {2, 4}, {4, 3}, {3, 5}, {0, 5}});
  const auto r = validate_symmetry(k);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(std::any_of(r.violations.begin(), r.violations.end(),
                          [](const std::string& v) { return v.find("missing antipodal") != v.npos; }));
}

TEST(ValidateSymmetry, NonManifold) {
  // Two squares sharing vertex 0: vertex 0 meets four edges.
  SymmetricComplex k(1, {2, 3, 0, 1},
                     {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  const auto r = validate_symmetry(k);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(std::any_of(r.violations.begin(), r.violations.end(),
                          [](const std::string& v) { return v.find("non-manifold") != v.npos; }));
}

TEST(ValidateSymmetry, CoordinateMismatch) {
  SymmetricComplex k(1, {2, 3, 0, 1}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}},
                     std::vector<std::vector<double>>{{1, 0}, {0, 1}, {-1, 0}, {0, 1}});
  const auto r = validate_symmetry(k);
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.violations.back().find("coordinate mismatch"), std::string::npos);
}
