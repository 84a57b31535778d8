#include "rhnum/radix.hpp"

#include <random>
#include <vector>

#include <gtest/gtest.h>

namespace rhnum {
namespace {

// Digit extraction by repeated division, one digit at a time. Independent of
// the chunked and GMP text-conversion paths in radix.hpp.
std::vector<Digit> slow_digits_msb(Natural n, std::uint32_t b) {
  std::vector<Digit> out;
  do {
    out.insert(out.begin(), static_cast<Digit>(static_cast<std::uint64_t>(n % b)));
    n /= b;
  } while (n != 0);
  return out;
}

Natural random_natural(std::mt19937_64& rng, unsigned max_limbs) {
  std::uniform_int_distribution<unsigned> limbs(1, max_limbs);
  Natural n = 0;
  for (unsigned i = 0, l = limbs(rng); i < l; ++i) {
    n <<= 64;
    n += rng();
  }
  return n;
}

TEST(Radix, BaseValidation) {
  EXPECT_THROW(Radix(1), ValidationError);
  EXPECT_THROW(Radix(0), ValidationError);
  EXPECT_THROW(Radix(-3), ValidationError);
  EXPECT_THROW(Radix(65537), ValidationError);
  EXPECT_EQ(Radix(65536).value(), 65536u);
}

TEST(Radix, ToNatural) {
  EXPECT_EQ(to_natural(DigitString::parse("1.2@3")), 5);
  EXPECT_EQ(to_natural(DigitString::parse("0.0.7@10")), 7);
  EXPECT_EQ(to_natural(DigitString::parse("1.0.0.1@2")), 9);
}

TEST(Radix, MalformedDigitNamesPosition) {
  try {
    DigitString::parse("1.0.5@5");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("position 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(DigitString(Radix(3), {1, 3}), ValidationError);
  EXPECT_THROW(DigitString::parse("1..2@10"), ValidationError);
  EXPECT_THROW(DigitString::parse("1.2"), ValidationError);  // no base anywhere
  EXPECT_EQ(DigitString::parse("1.2", Radix(3)), DigitString(Radix(3), {1, 2}));
}

TEST(Radix, FromNatural) {
  EXPECT_EQ(from_natural(Natural(20), 3).to_string(), "2.0.2@3");
  EXPECT_EQ(from_natural(Natural(0), 7).to_string(), "0@7");
  EXPECT_EQ(from_natural(Natural(325), 2).to_string(), "1.0.1.0.0.0.1.0.1@2");
}

TEST(Radix, DigitSum) {
  EXPECT_EQ(digit_sum(Natural(1729), 10), 19);
  EXPECT_EQ(digit_sum(Natural(40), 3), 4);
  EXPECT_EQ(digit_sum(Natural(0), 10), 0);
  EXPECT_EQ(digit_sum(std::uint64_t{1729}, 10), 19u);
}

TEST(Radix, Reversal) {
  EXPECT_EQ(reversal(Natural(1200), 10), 21);
  EXPECT_EQ(reversal(Natural(9), 2), 9);
  EXPECT_EQ(reversal(Natural(80), 2), 5);
}

TEST(Radix, ReversalFixedWidth) {
  EXPECT_EQ(reversal_fixed_width(1152, 2, 13), 36);
  EXPECT_EQ(reversal_fixed_width(21, 10, 4), 1200);
  EXPECT_EQ(reversal_fixed_width(7, 10, 1), 7);
  EXPECT_THROW(reversal_fixed_width(100, 10, 2), ValidationError);
}

TEST(Radix, Palindrome) {
  EXPECT_TRUE(is_palindrome(Natural(325), 2));
  EXPECT_FALSE(is_palindrome(Natural(10), 10));
  EXPECT_TRUE(is_palindrome(Natural(0), 10));
  EXPECT_TRUE(is_palindrome(Natural(0), 2));
}

TEST(Radix, ConcatAndRepeat) {
  const DigitString twelve(10, {1, 2});
  EXPECT_EQ(repeat(twelve, 3).digits_text(), "1.2.1.2.1.2");
  EXPECT_EQ(concat(DigitString(2, {1}), DigitString(2, {0})).digits_text(), "1.0");
  const auto empty = repeat(DigitString(10, {9}), 0);
  EXPECT_TRUE(empty.empty());
  EXPECT_THROW(to_natural(empty), ValidationError);
  EXPECT_THROW(concat(DigitString(2, {1}), DigitString(3, {1})), ValidationError);
}

TEST(Radix, Canonical) {
  const auto ds = DigitString::parse("0.0.7@10");
  EXPECT_FALSE(ds.is_canonical());
  EXPECT_EQ(ds.canonical().digits_text(), "7");
  EXPECT_EQ(DigitString(10, {0, 0}).canonical().digits_text(), "0");
  EXPECT_EQ(to_natural(ds.canonical()), to_natural(ds));
}

// Big values exercise the GMP text path (b <= 62) and the chunked path
// (b > 62) against one-digit-at-a-time division.
TEST(RadixProperty, LargeValueDigitsMatchSlowOracle) {
  std::mt19937_64 rng(7);
  for (std::uint32_t b : {2u, 3u, 10u, 16u, 36u, 37u, 62u, 63u, 100u, 65536u}) {
    for (int i = 0; i < 20; ++i) {
      const Natural n = random_natural(rng, 6);
      const auto fast = from_natural(n, b);
      ASSERT_EQ(fast.digits(), slow_digits_msb(n, b)) << "b=" << b << " n=" << n;
      ASSERT_EQ(to_natural(fast), n);
      Natural s = 0;
      for (Digit d : fast.digits()) s += d;
      ASSERT_EQ(digit_sum(n, b), s);
    }
  }
}

TEST(RadixProperty, RoundTrip) {
  std::mt19937_64 rng(11);
  for (std::uint32_t b = 2; b <= 70; ++b) {
    for (int i = 0; i < 30; ++i) {
      const Natural n = random_natural(rng, 3) >> (rng() % 150);
      ASSERT_EQ(to_natural(from_natural(n, b)), n) << b;
    }
  }
}

TEST(RadixProperty, ReversalInvolution) {
  for (std::uint32_t b : {2u, 3u, 7u, 10u, 16u}) {
    for (std::uint64_t n = 1; n <= 3000; ++n) {
      const Natural v = n;
      if (n % b != 0) {
        ASSERT_EQ(reversal(reversal(v, b), b), v);
      } else {
        ASSERT_LT(reversal(reversal(v, b), b), v);
      }
    }
  }
}

TEST(RadixProperty, CastingOut) {
  std::mt19937_64 rng(3);
  for (std::uint32_t b = 3; b <= 40; ++b) {
    for (int i = 0; i < 40; ++i) {
      const Natural n = random_natural(rng, 4);
      ASSERT_EQ((n - digit_sum(n, b)) % (b - 1), 0) << b;
    }
  }
}

TEST(RadixProperty, PalindromeMatchesFixedWidthReversal) {
  for (std::uint32_t b : {2u, 3u, 10u}) {
    for (std::uint64_t n = 0; n <= 5000; ++n) {
      const Natural v = n;
      ASSERT_EQ(is_palindrome(v, b), v == reversal_fixed_width(v, b, digit_count(v, b))) << n;
    }
  }
}

TEST(RadixProperty, ConcatHomomorphism) {
  std::mt19937_64 rng(5);
  for (std::uint32_t b : {2u, 5u, 10u, 60u, 1000u}) {
    for (int i = 0; i < 50; ++i) {
      const auto x = from_natural(random_natural(rng, 2), b);
      const auto y = from_natural(random_natural(rng, 2), b);
      ASSERT_EQ(to_natural(concat(x, y)), to_natural(x) * power(b, y.size()) + to_natural(y));
    }
  }
}

TEST(RadixProperty, NaturalAndMachineWordPathsAgree) {
  for (std::uint32_t b : {2u, 10u, 13u}) {
    for (std::uint64_t n = 0; n <= 2000; ++n) {
      ASSERT_EQ(Natural(reversal(n, b)), reversal(Natural(n), b));
      ASSERT_EQ(Natural(digit_sum(n, b)), digit_sum(Natural(n), b));
      ASSERT_EQ(is_palindrome(n, b), is_palindrome(Natural(n), b));
    }
  }
}

}  // namespace
}  // namespace rhnum
