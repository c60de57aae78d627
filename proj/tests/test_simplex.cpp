#include <gtest/gtest.h>

#include <sstream>

#include "tucker/simplex.hpp"

using tucker::Simplex;

TEST(Simplex, SortsAndRejectsRepeats) {
  Simplex s{7, 1, 4};
  EXPECT_EQ(s.dim(), 2);
  EXPECT_EQ(s[0], 1u);
  EXPECT_EQ(s[2], 7u);
  EXPECT_THROW(Simplex({1, 1}), std::invalid_argument);
  EXPECT_THROW(Simplex(std::vector<tucker::VertexId>{}), std::invalid_argument);
}

TEST(Simplex, FaceRelations) {
  Simplex e{1, 4};
  Simplex t{1, 4, 7};
  EXPECT_TRUE(e.is_face_of(t));
  EXPECT_TRUE(e.is_facet_of(t));
  EXPECT_FALSE(Simplex{1}.is_facet_of(t));
  EXPECT_TRUE(t.is_face_of(t));
  EXPECT_FALSE(t.is_facet_of(t));
  EXPECT_EQ(t.without(1), (Simplex{1, 7}));
  EXPECT_EQ(e.with(0), (Simplex{0, 1, 4}));
  EXPECT_THROW(Simplex{3}.without(0), std::invalid_argument);
}

TEST(Simplex, Printing) {
  std::ostringstream os;
  os << Simplex{2, 0};
  EXPECT_EQ(os.str(), "{0,2}");
  EXPECT_EQ(to_string(Simplex{5}), "{5}");
}

TEST(Faces, EdgesOfTriangle) {
  auto f = faces(Simplex{1, 4, 7}, 1);
  std::vector<Simplex> want{{1, 4}, {1, 7}, {4, 7}};
  EXPECT_EQ(f, want);
}

TEST(Faces, VertexIsItsOwnFace) {
  EXPECT_EQ(faces(Simplex{3}, 0), std::vector<Simplex>{Simplex{3}});
}

TEST(Faces, TriplesOfTetrahedron) {
  auto f = faces(Simplex{0, 2, 5, 9}, 2);
  std::vector<Simplex> want{{0, 2, 5}, {0, 2, 9}, {0, 5, 9}, {2, 5, 9}};
  EXPECT_EQ(f, want);
}

TEST(Faces, OutOfRange) {
  EXPECT_THROW(faces(Simplex{1, 2}, 2), std::out_of_range);
  EXPECT_THROW(faces(Simplex{1, 2}, -1), std::out_of_range);
}

TEST(Cofacets, NotAFace) {
  std::vector<Simplex> pool{{0, 1}, {1, 2}};
  EXPECT_TRUE(cofacets(Simplex{3}, pool).empty());
}

TEST(Cofacets, OnlyOneDimensionUp) {
  std::vector<Simplex> pool{{0, 1}, {0, 1, 2}, {0, 3}};
  std::vector<Simplex> want{{0, 1}, {0, 3}};
  EXPECT_EQ(cofacets(Simplex{0}, pool), want);
}

TEST(SimplexSet, HashesBySet) {
  tucker::SimplexSet s;
  s.insert(Simplex{2, 1});
  EXPECT_TRUE(s.contains(Simplex{1, 2}));
  EXPECT_FALSE(s.contains(Simplex{1, 3}));
}
