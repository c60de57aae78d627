#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "tucker/flag.hpp"
#include "tucker/generators.hpp"

using namespace tucker;
using testing_support::ne;
using testing_support::pe;

namespace {

bool mentions(const FlagReport& r, int d, const std::string& text) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const FlagViolation& v) {
    return v.dim == d && v.what.find(text) != std::string::npos;
  });
}

}  // namespace

TEST(ValidateFlag, OctahedralPasses) {
  for (int n = 1; n <= 4; ++n) {
    const auto t = octahedral(n);
    const auto r = validate_flag(t.complex, t.flag);
    EXPECT_TRUE(r.ok) << "n=" << n << (r.violations.empty() ? "" : ": " + r.violations[0].what);
  }
}

TEST(ValidateFlag, MissingEdgeBreaksBoundaryAtLevelOne) {
  const auto t = octahedral(2);
  auto levels = t.flag.levels();
  levels[1].pop_back();
  HemisphereFlag f(t.complex, levels);
  const auto r = validate_flag(t.complex, f);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(mentions(r, 1, "boundary of H_d"));
}

TEST(ValidateFlag, OverlappingHemispheres) {
  const auto t = octahedral(1);
  // H_1 = both edges at e2 plus one at -e2: overlaps its antipode.
  HemisphereFlag f(t.complex, {{{pe(1, 1)}}, {{pe(1, 1), pe(1, 2)}, {pe(1, 2), ne(1, 1)}, {pe(1, 1), ne(1, 2)}}});
  const auto r = validate_flag(t.complex, f);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(mentions(r, 1, "both H_d and -H_d"));
}

TEST(ValidateFlag, BaseMustBeOneVertex) {
  const auto t = octahedral(1);
  HemisphereFlag f(t.complex, {{{pe(1, 1)}, {pe(1, 2)}}, t.flag.levels()[1]});
  EXPECT_TRUE(mentions(validate_flag(t.complex, f), 0, "single vertex"));
}

TEST(ValidateFlag, ForeignSimplex) {
  const auto t = octahedral(2);
  auto levels = t.flag.levels();
  levels[1].push_back(Simplex{pe(2, 1), ne(2, 1)});
  HemisphereFlag f(t.complex, levels);
  EXPECT_TRUE(mentions(validate_flag(t.complex, f), 1, "not in the complex"));
}

TEST(ValidateFlag, MustCoverSphere) {
  const auto t = octahedral(2);
  auto levels = t.flag.levels();
  levels[2].pop_back();
  HemisphereFlag f(t.complex, levels);
  EXPECT_TRUE(mentions(validate_flag(t.complex, f), 2, "not in H_n"));
}

// Under the vertex-wise involution the two upper faces of the 4-vertex
// sphere are each other's images, so H_2 = -H_2 and the lower faces are
// never covered.
TEST(ValidateFlag, TetraHemisphereIsSelfAntipodal) {
  const auto t = paper_tetra();
  EXPECT_TRUE(validate_symmetry(t.complex).ok);
  const auto r = validate_flag(t.complex, t.flag);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(mentions(r, 2, "both H_d and -H_d"));
  EXPECT_TRUE(mentions(r, 2, "not in H_n"));
  EXPECT_EQ(t.complex.antipode(Simplex{0, 1, 3}), (Simplex{1, 2, 3}));
}

TEST(HemisphereFlag, ShapeErrors) {
  const auto t = octahedral(2);
  EXPECT_THROW(HemisphereFlag(t.complex, {{{0}}, {{0, 1}}}), std::invalid_argument);
  EXPECT_THROW(HemisphereFlag(t.complex, {{}, {{0, 1}}, {{0, 1, 2}}}), std::invalid_argument);
  EXPECT_THROW(HemisphereFlag(t.complex, {{{0}}, {{0, 1, 2}}, {{0, 1, 2}}}), std::invalid_argument);
}

TEST(Carrier, Examples) {
  const auto t = octahedral(2);
  EXPECT_EQ(carrier(t.flag, Simplex{pe(2, 1)}), (Carrier{0, +1}));
  EXPECT_EQ(carrier(t.flag, Simplex{pe(2, 2)}), (Carrier{1, +1}));
  EXPECT_EQ(carrier(t.flag, Simplex{pe(2, 1), ne(2, 2), pe(2, 3)}), (Carrier{2, +1}));
  EXPECT_EQ(carrier(t.flag, Simplex{ne(2, 1)}), (Carrier{0, -1}));
  // -e2 lies on the boundary of H_1 only as part of -H_1.
  EXPECT_EQ(carrier(t.flag, Simplex{ne(2, 2)}), (Carrier{1, -1}));
  // ±e3 first appear at level 2.
  EXPECT_EQ(carrier(t.flag, Simplex{ne(2, 3)}), (Carrier{2, -1}));
}

TEST(Carrier, AmbiguousAndMissing) {
  const auto tet = paper_tetra();
  EXPECT_THROW(carrier(tet.flag, Simplex{0, 1, 3}), StructuralError);

  const auto t = octahedral(2);
  auto levels = t.flag.levels();
  levels[2].pop_back();
  HemisphereFlag partial(t.complex, levels);
  const Simplex dropped = t.flag.levels()[2].back();
  EXPECT_THROW(carrier(partial, dropped), StructuralError);
}

TEST(Cofacets, HemisphereIncidence) {
  const auto t1 = octahedral(1);
  const auto& up = t1.flag.cofacets_in(Simplex{pe(1, 2)}, 1, +1);
  std::vector<Simplex> want{{pe(1, 1), pe(1, 2)}, {pe(1, 2), ne(1, 1)}};
  EXPECT_EQ(up, want);
  EXPECT_EQ(cofacets(Simplex{pe(1, 2)}, t1.flag.hemisphere(1, +1)), want);

  // Boundary (d-1)-simplices of every hemisphere have exactly one cofacet on
  // each side; interior ones have two on their own side.
  const auto t = octahedral(2);
  for (int d = 1; d <= 2; ++d)
    for (int sign : {+1, -1}) {
      const auto& members = t.flag.hemisphere(d, sign);
      for (const Simplex& b : t.flag.hemisphere(d - 1, +1)) EXPECT_EQ(cofacets(b, members).size(), 1u);
      for (const Simplex& b : t.flag.hemisphere(d - 1, -1)) EXPECT_EQ(cofacets(b, members).size(), 1u);
    }
}
