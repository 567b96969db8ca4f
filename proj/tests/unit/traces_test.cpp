#include <gtest/gtest.h>

#include "mpst/parser.hpp"
#include "mpst/traces.hpp"

namespace mpst {
namespace {

Trace t(const char* s) { return parse_trace(s); }

TEST(NormalForm, Cases) {
  EXPECT_EQ(trace_normal_form(t("r s l . p q l2")), t("p q l2 . r s l"));
  EXPECT_EQ(trace_normal_form({}), Trace{});
  EXPECT_EQ(trace_normal_form(t("p q l1 . q r l2")), t("p q l1 . q r l2"));
  // Greedy choice of the least movable letter, not adjacent sorting.
  EXPECT_EQ(trace_normal_form(t("u p l . p q l . r s l")), t("r s l . u p l . p q l"));
}

TEST(Equivalence, Cases) {
  EXPECT_TRUE(trace_equivalent(t("p q a . r s b"), t("r s b . p q a")));
  EXPECT_FALSE(trace_equivalent(t("p q a . q r b"), t("q r b . p q a")));
  EXPECT_FALSE(trace_equivalent(t("p q a"), t("p q a . p q a")));
  EXPECT_TRUE(trace_equivalent({}, {}));
}

TEST(Pointed, Cases) {
  EXPECT_TRUE(is_pointed(t("p q l1")));
  EXPECT_FALSE(is_pointed(t("p q l1 . r s l2")));
  EXPECT_TRUE(is_pointed(t("p q l1 . r s l2 . r p l3")));
  EXPECT_THROW(is_pointed({}), std::invalid_argument);
}

TEST(Prefix, Cases) {
  EXPECT_TRUE(trace_prefix(t("p q l"), t("r s m . p q l . s q n")));
  EXPECT_TRUE(trace_prefix({}, t("p q l")));
  EXPECT_FALSE(trace_prefix(t("p q l1"), t("p q l2")));
  EXPECT_FALSE(trace_prefix(t("q r m"), t("p q l . q r m")));
  const auto rest = trace_residual(t("r s m . p q l . s q n"), t("p q l"));
  ASSERT_TRUE(rest);
  EXPECT_TRUE(trace_equivalent(*rest, t("r s m . s q n")));
}

TEST(CommonPrefix, Cases) {
  const auto c = common_prefix(t("r s l . p q l1 . q r l"), t("p q l2 . r s l"));
  EXPECT_TRUE(trace_equivalent(c.prefix, t("r s l")));
  EXPECT_EQ(c.rest_a, t("p q l1 . q r l"));
  EXPECT_EQ(c.rest_b, t("p q l2"));
  const auto d = common_prefix(t("p q a"), t("p q a"));
  EXPECT_EQ(d.prefix, t("p q a"));
  EXPECT_TRUE(d.rest_a.empty());
}

TEST(Minimal, Positions) {
  EXPECT_EQ(minimal_positions(t("p q a . r s b . q r c")), (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(minimal_positions({}).empty());
}

}  // namespace
}  // namespace mpst
