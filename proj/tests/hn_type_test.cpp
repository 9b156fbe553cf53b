#include <gtest/gtest.h>

#include "hbstrata/admissibility.hpp"
#include "hbstrata/error.hpp"
#include "hbstrata/hn_type.hpp"

using namespace hbstrata;

namespace {

HNPolygon poly(const char* text) { return polygon_of(HNType::parse(text)); }

std::vector<std::pair<Int, Int>> verts(std::initializer_list<std::pair<Int, Int>> v) { return v; }

}  // namespace

TEST(HNType, ParseAndPrint) {
  auto hn = HNType::parse("1:1,2:-1");
  ASSERT_EQ(hn.steps().size(), 2u);
  EXPECT_EQ(hn.total_rank(), 3);
  EXPECT_EQ(hn.total_degree(), 0);
  EXPECT_EQ(hn.to_string(), "1:1,2:-1");
  EXPECT_EQ(hn.slope_vector(), (std::vector<Rational>{1, Rational(-1, 2), Rational(-1, 2)}));
}

TEST(HNType, MergesEqualSlopes) {
  EXPECT_EQ(HNType::parse("1:1,1:0,1:0").to_string(), "1:1,2:0");
  EXPECT_EQ(HNType::parse("1:2,1:2").to_string(), "2:4");
  EXPECT_EQ(HNType::parse("2:1,1:0,2:0").to_string(), "2:1,3:0");
  EXPECT_TRUE(HNType::parse("1:0,2:0").is_semistable());
}

TEST(HNType, RejectsIncreasingSlopesAndBadText) {
  EXPECT_THROW(HNType::parse("1:0,1:1"), Error);
  EXPECT_THROW(HNType::parse("0:1"), Error);
  EXPECT_THROW(HNType::parse(""), Error);
  EXPECT_THROW(HNType::parse("1:1,"), Error);
  EXPECT_THROW(HNType::parse("a:1"), Error);
  EXPECT_THROW(HNType({}), Error);
}

TEST(HNType, FromPiecesSortsBySlope) {
  auto hn = HNType::from_pieces({{1, -1}, {1, 1}, {1, 0}});
  EXPECT_EQ(hn.to_string(), "1:1,1:0,1:-1");
}

TEST(HNPolygon, PartialSums) {
  EXPECT_EQ(poly("1:1,1:0,1:-1").vertices, verts({{0, 0}, {1, 1}, {2, 1}, {3, 0}}));
  EXPECT_EQ(poly("2:1,1:-1").vertices, verts({{0, 0}, {2, 1}, {3, 0}}));
  EXPECT_EQ(poly("3:0").vertices, verts({{0, 0}, {3, 0}}));
}

TEST(HNPolygon, HeightInterpolates) {
  auto p = poly("2:1,1:-1");
  EXPECT_EQ(p.height_at(1), Rational(1, 2));
  EXPECT_EQ(p.height_at(2), Rational(1));
  EXPECT_EQ(p.height_at(3), Rational(0));
}

TEST(HNPolygon, Dominance) {
  // Heights (2,2) against (1,1).
  EXPECT_TRUE(dominates(poly("1:2,1:0,1:-2"), poly("1:1,1:0,1:-1")));
  EXPECT_FALSE(dominates(poly("1:1,1:0,1:-1"), poly("1:2,1:0,1:-2")));
  EXPECT_TRUE(dominates(poly("1:1,1:0,1:-1"), poly("1:1,1:0,1:-1")));
  // Heights (1/2,1) and (1,1/2) are incomparable.
  EXPECT_FALSE(dominates(poly("2:1,1:-1"), poly("1:1,2:-1")));
  EXPECT_FALSE(dominates(poly("1:1,2:-1"), poly("2:1,1:-1")));
}

TEST(HNPolygon, DominanceNeedsSameEndpoints) {
  try {
    dominates(poly("3:0"), poly("3:1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MismatchedEndpoints);
  }
  EXPECT_THROW(dominates(poly("3:0"), poly("2:0")), Error);
}

// Strict convexity, and dominance as a partial order over every admissible
// type for small (g, d).
TEST(HNPolygon, ConvexityAndPartialOrder) {
  for (Int g = 2; g <= 3; ++g) {
    for (Int d = -2; d <= 2; ++d) {
      auto strata = enumerate_strata(3, d, Genus(g));
      std::vector<HNPolygon> ps;
      for (const auto& s : strata) {
        auto p = polygon_of(s.hn);
        for (std::size_t i = 2; i < p.vertices.size(); ++i) {
          auto [r0, d0] = p.vertices[i - 2];
          auto [r1, d1] = p.vertices[i - 1];
          auto [r2, d2] = p.vertices[i];
          ASSERT_GT(Rational(d1 - d0, r1 - r0), Rational(d2 - d1, r2 - r1));
        }
        ps.push_back(p);
      }
      for (const auto& a : ps) {
        ASSERT_TRUE(dominates(a, a));
        for (const auto& b : ps) {
          if (dominates(a, b) && dominates(b, a)) ASSERT_EQ(a, b);
          for (const auto& c : ps) {
            if (dominates(a, b) && dominates(b, c)) ASSERT_TRUE(dominates(a, c));
          }
        }
      }
    }
  }
}

TEST(Genus, CanonicalDegree) {
  EXPECT_EQ(Genus(2).canonical_degree(), 2);
  EXPECT_EQ(Genus(5).canonical_degree(), 8);
  EXPECT_THROW(Genus(1), Error);
}
