#include <gtest/gtest.h>

#include "alias_calc/path_expr.hpp"

namespace aliasing {
namespace {

TEST(PathExpr, ParsesAndPrints) {
  EXPECT_EQ(PathExpr::parse("x").str(), "x");
  EXPECT_EQ(PathExpr::parse("x.first.right").str(), "x.first.right");
  EXPECT_EQ(PathExpr::parse("x'.l").str(), "x'.l");
  EXPECT_EQ(PathExpr::parse("Current").str(), "Current");
  EXPECT_TRUE(PathExpr::parse("Current").is_current());
}

TEST(PathExpr, CurrentIsTheIdentity) {
  const PathExpr e = PathExpr::parse("u.v");
  EXPECT_EQ(concat(PathExpr::current(), e), e);
  EXPECT_EQ(concat(e, PathExpr::current()), e);
  EXPECT_EQ(PathExpr::parse("Current.x"), PathExpr::parse("x"));
  EXPECT_EQ(PathExpr::parse("x.Current"), PathExpr::parse("x"));
}

TEST(PathExpr, NegationCancels) {
  EXPECT_TRUE(PathExpr::parse("x.x'").is_current());
  EXPECT_TRUE(PathExpr::parse("x'.x").is_current());
  EXPECT_EQ(PathExpr::parse("x.x'.e"), PathExpr::parse("e"));
  EXPECT_EQ(PathExpr::parse("x'.x.e"), PathExpr::parse("e"));
  EXPECT_EQ(PathExpr::parse("a.x.x'.b"), PathExpr::parse("a.b"));
  // Only adjacent inverse segments cancel.
  EXPECT_EQ(PathExpr::parse("x.y.x'").size(), 3u);
}

TEST(PathExpr, CancellationCascades) {
  EXPECT_TRUE(PathExpr::parse("x.y.y'.x'").is_current());
  EXPECT_EQ(concat(PathExpr::parse("x.y"), PathExpr::parse("y'.x'.z")),
            PathExpr::parse("z"));
}

TEST(PathExpr, InverseUndoesConcatenation) {
  const PathExpr t = PathExpr::parse("x.first");
  EXPECT_EQ(t.inverse().str(), "first'.x'");
  EXPECT_TRUE(concat(t, t.inverse()).is_current());
  EXPECT_EQ(concat(t, concat(t.inverse(), PathExpr::parse("l"))),
            PathExpr::parse("l"));
}

TEST(PathExpr, DotCount) {
  EXPECT_EQ(PathExpr::current().dot_count(), 0u);
  EXPECT_EQ(PathExpr::parse("x").dot_count(), 0u);
  EXPECT_EQ(PathExpr::parse("x.first.right.right").dot_count(), 3u);
}

TEST(PathExpr, HeadAndPrefix) {
  const PathExpr e = PathExpr::parse("x.a.b");
  ASSERT_TRUE(e.head());
  EXPECT_EQ(e.head()->name, "x");
  EXPECT_TRUE(e.starts_with(PathExpr::parse("x.a")));
  EXPECT_FALSE(e.starts_with(PathExpr::parse("x.b")));
  EXPECT_TRUE(e.starts_with(PathExpr::current()));
  EXPECT_EQ(e.slice(1, 3), PathExpr::parse("a.b"));
  EXPECT_FALSE(PathExpr::current().head());
}

TEST(PathExpr, NegationFlag) {
  EXPECT_TRUE(PathExpr::parse("x'.f").has_negation());
  EXPECT_FALSE(PathExpr::parse("x.f").has_negation());
  EXPECT_FALSE(PathExpr::parse("x'").is_variable());
}

TEST(PathExpr, RejectsMalformedText) {
  EXPECT_THROW(PathExpr::parse(""), std::invalid_argument);
  EXPECT_THROW(PathExpr::parse("x..y"), std::invalid_argument);
  EXPECT_THROW(PathExpr::parse("1x"), std::invalid_argument);
  EXPECT_THROW(PathExpr::parse("x."), std::invalid_argument);
  EXPECT_THROW(PathExpr::parse("Current'"), std::invalid_argument);
}

TEST(PathExpr, TextualOrderIsUsedForPrinting) {
  TextualLess less;
  EXPECT_TRUE(less(PathExpr::parse("Current"), PathExpr::parse("f")));
  EXPECT_TRUE(less(PathExpr::parse("x.b"), PathExpr::parse("x.b.f")));
  EXPECT_TRUE(less(PathExpr::parse("x.b.f"), PathExpr::parse("x.c")));
}

}  // namespace
}  // namespace aliasing
