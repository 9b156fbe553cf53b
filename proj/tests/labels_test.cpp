#include <gtest/gtest.h>

#include "hbstrata/error.hpp"
#include "hbstrata/labels.hpp"

using namespace hbstrata;

TEST(Labels, TextEncoding) {
  EXPECT_EQ(to_string(FixedComponentLabel{label::Min{3, 0}}), "min");
  EXPECT_EQ(to_string(FixedComponentLabel{label::Rank2{1}}), "r2:1");
  EXPECT_EQ(to_string(FixedComponentLabel{label::Type12{1, 0}}), "t12:1|0");
  EXPECT_EQ(to_string(FixedComponentLabel{label::Type21{1, -1}}), "t21:1|-1");
  EXPECT_EQ(to_string(FixedComponentLabel{label::Type111{2, 0, -2}}), "t111:2,0,-2");
  auto poly = make_polystable({{{0}, {2}}, {{1, -1}, {0, 1}}});
  EXPECT_EQ(to_string(FixedComponentLabel{poly}), "poly:[1,-1]+[0]");
}

TEST(Labels, PolystableIsCanonical) {
  // Same summands, different order and weight offsets.
  auto a = make_polystable({{{0}, {0}}, {{1, -1}, {1, 2}}});
  auto b = make_polystable({{{1, -1}, {0, 1}}, {{0}, {2}}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.summands[0].weights, (std::vector<Int>{0, 1}));
}

TEST(Labels, ParseRoundTrip) {
  for (const char* text : {"min", "r2:3", "t12:1|0", "t21:4|-2", "t111:1,0,-1", "poly:[1,-1]+[0]", "poly:[0]+[1]+[2]"}) {
    EXPECT_EQ(to_string(parse_label(text, 3, 0)), text);
  }
  EXPECT_EQ(parse_label("poly:[2]+[1]+[0]", 3, 3), parse_label("poly:[0]+[1]+[2]", 3, 3));
  EXPECT_EQ(parse_label("min", 3, 1), (FixedComponentLabel{label::Min{3, 1}}));
  for (const char* bad : {"", "mn", "r2:", "t12:1", "t111:1,2", "poly:[1]", "poly:[1,a]+[0]", "poly:[1]x[0]"}) {
    EXPECT_THROW(parse_label(bad), Error) << bad;
  }
}

TEST(Labels, Degrees) {
  EXPECT_EQ(label_degree(label::Type111{2, 0, -2}), 0);
  EXPECT_EQ(label_degree(label::Type12{1, 0}), 1);
  EXPECT_EQ(label_degree(make_polystable({{{1, -1}, {0, 1}}, {{0}, {0}}})), 0);
  EXPECT_FALSE(label_degree(label::Rank2{1}).has_value());
}

TEST(CaseTags, RoundTripAndPolystableFlag) {
  int polystable = 0;
  for (CaseTag t : kAllCaseTags) {
    EXPECT_EQ(parse_case_tag(to_string(t)), t);
    polystable += is_strictly_polystable_case(t) ? 1 : 0;
  }
  EXPECT_EQ(polystable, 3);
  EXPECT_TRUE(is_strictly_polystable_case(CaseTag::C2_2));
  EXPECT_FALSE(parse_case_tag("4.1"));
}
