#include "rhnum/pattern.hpp"

#include <random>

#include <gtest/gtest.h>

namespace rhnum {
namespace {

Natural eval(const std::string& text, const Bindings& b = {}) { return to_natural(expand(parse_pattern(text), b)); }

TEST(Pattern, ParsesVariablesAndGroups) {
  const auto t = parse_pattern("[1.(0)^k.8]@10");
  EXPECT_EQ(t.base(), Radix(10));
  EXPECT_EQ(t.count_variables(), std::set<std::string>{"k"});
  EXPECT_TRUE(t.digit_variables().empty());
  ASSERT_EQ(t.items().size(), 3u);
  const auto& g = std::get<PatternTemplate::Group>(t.items()[1].node);
  EXPECT_EQ(std::get<std::string>(g.exponent), "k");

  const auto r = parse_pattern("[(1.2)^k]@10");
  ASSERT_EQ(r.items().size(), 1u);
  const auto& g2 = std::get<PatternTemplate::Group>(r.items()[0].node);
  EXPECT_EQ(g2.items->size(), 2u);
}

TEST(Pattern, DigitOutOfBaseRejectedAtParse) {
  try {
    parse_pattern("[7]@5");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 1u);
  }
}

TEST(Pattern, SyntaxErrorsCarryPosition) {
  EXPECT_THROW(parse_pattern("1.2@10"), ParseError);
  EXPECT_THROW(parse_pattern("[1.2]"), ParseError);
  EXPECT_THROW(parse_pattern("[1..2]@10"), ParseError);
  EXPECT_THROW(parse_pattern("[(1.2)]@10"), ParseError);
  EXPECT_THROW(parse_pattern("[1.2]@1"), ParseError);
  EXPECT_THROW(parse_pattern("[1.2]@10x"), ParseError);
  try {
    parse_pattern("[1.(0)^.8]@10");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 7u);
  }
}

TEST(Pattern, WhitespaceInsignificant) {
  EXPECT_EQ(parse_pattern(" [ 1 . ( 0 ) ^ k . 8 ] @ 10 "), parse_pattern("[1.(0)^k.8]@10"));
}

TEST(Pattern, Expand) {
  const auto ds = expand(parse_pattern("[1.(0)^k.8]@10"), {{{"k", 1}}, {}});
  EXPECT_EQ(ds.digits_text(), "1.0.8");
  EXPECT_EQ(to_natural(ds), 108);
  EXPECT_EQ(eval("[(1.2)^k]@10", {{{"k", 3}}, {}}), 121212);
  EXPECT_EQ(expand(parse_pattern("[a.(0)^k.a]@10"), {{{"k", 2}}, {{"a", 3}}}).digits_text(), "3.0.0.3");
}

TEST(Pattern, ExpandErrors) {
  EXPECT_THROW(expand(parse_pattern("[1.(0)^k]@10")), ValidationError);
  EXPECT_THROW(expand(parse_pattern("[a]@10")), ValidationError);
  EXPECT_THROW(expand(parse_pattern("[a]@10"), {{}, {{"a", 10}}}), ValidationError);
  const auto empty = expand(parse_pattern("[(9)^k]@10"), {{{"k", 0}}, {}});
  EXPECT_TRUE(empty.empty());
  EXPECT_THROW(to_natural(empty), ValidationError);
}

TEST(Pattern, NestedGroups) {
  // ((1.0)^2.0)^2 = 1.0.1.0.0.1.0.1.0.0
  EXPECT_EQ(expand(parse_pattern("[((1.0)^2.0)^2]@2")).digits_text(), "1.0.1.0.0.1.0.1.0.0");
}

TEST(PatternProperty, RenderParseRoundTrip) {
  for (const char* text : {"[1.(0)^k.8]@10", "[(1.2)^k]@10", "[a.(0)^k.a]@10", "[((1.0)^3.0)^k.x]@2",
                           "[1.14.(15)^j.14.1]@16", "[65535.(0)^0]@65536"}) {
    const auto t = parse_pattern(text);
    EXPECT_EQ(t.render(), text);
    EXPECT_EQ(parse_pattern(t.render()), t);
  }
}

TEST(PatternProperty, LengthLaw) {
  for (std::uint64_t k = 0; k <= 12; ++k) {
    const auto inner = expand(parse_pattern("[1.0.(2)^j]@3"), {{{"j", 2}}, {}});
    const auto outer = expand(parse_pattern("[(1.0.(2)^j)^k]@3"), {{{"j", 2}, {"k", k}}, {}});
    EXPECT_EQ(outer.size(), k * inner.size());
  }
}

TEST(PatternProperty, ZeroGapValueLaw) {
  std::mt19937_64 rng(17);
  for (std::uint32_t b : {2u, 7u, 10u}) {
    for (int i = 0; i < 40; ++i) {
      const std::uint64_t x = 1 + rng() % 1000;
      const std::uint64_t y = rng() % 1000;
      const std::uint64_t ell = rng() % 6;
      const auto xs = from_natural(x, b);
      const auto ys = from_natural(y, b);
      const std::string text =
          "[" + xs.digits_text() + ".(0)^l." + ys.digits_text() + "]@" + std::to_string(b);
      const Natural expected = Natural(x) * power(b, ell + ys.size()) + y;
      EXPECT_EQ(eval(text, {{{"l", ell}}, {}}), expected);
      const DigitString parts[] = {xs, repeat(DigitString(b, {0}), ell), ys};
      EXPECT_EQ(to_natural(concat(parts)), expected);
    }
  }
}

}  // namespace
}  // namespace rhnum
