#include "rhnum/families.hpp"

#include <random>

#include <gtest/gtest.h>

namespace rhnum {
namespace {

void expect_all_pass(const FamilyInstance& inst) {
  for (const auto& c : inst.checks) {
    EXPECT_EQ(c.status(), CheckStatus::pass) << c.name << " (" << to_string(c.semantics) << "): " << c.detail;
  }
}

const Check& check(const FamilyInstance& inst, std::string_view name, Semantics sem) {
  for (const auto& c : inst.checks) {
    if (c.name == name && c.semantics == sem) return c;
  }
  throw std::runtime_error("missing check " + std::string(name));
}

TEST(Thm1, Examples) {
  auto inst = thm1_family(10, 2, 1);
  EXPECT_EQ(inst.n, 121212);
  EXPECT_EQ(*inst.multiplier, 6734);
  expect_all_pass(inst);
  inst = thm1_family(3, 1, 1);
  EXPECT_EQ(inst.n, 40);
  EXPECT_EQ(*inst.multiplier, 5);
  expect_all_pass(inst);
}

TEST(Thm1, Preconditions) {
  try {
    thm1_family(8, 2, 0);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("b mod 6 = 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(thm1_family(2, 1, 0), PreconditionError);
  EXPECT_THROW(thm1_family(10, 0, 0), PreconditionError);
}

TEST(Thm1, GridIdentities) {
  for (auto [b, alpha] : {std::pair{3u, 1u}, {4u, 2u}, {10u, 2u}, {13u, 3u}}) {
    for (std::uint64_t ell = 0; ell <= 3; ++ell) {
      const auto inst = thm1_family(b, alpha, ell);
      const Natural s = digit_sum(inst.n, b);
      const Natural p = s * *inst.multiplier;
      ASSERT_EQ(p * 2, inst.n);
      ASSERT_EQ(reversal(p, b), p);
      ASSERT_EQ(inst.n % s, 0);
      expect_all_pass(inst);
    }
  }
}

TEST(Prop1, Examples) {
  EXPECT_EQ(*prop1_family(3, 1).multiplier, 5);
  auto inst = prop1_family(10, 0);
  EXPECT_EQ(inst.n, 18);
  EXPECT_EQ(*inst.multiplier, 1);
  inst = prop1_family(2, 3);
  EXPECT_EQ(inst.n, 17);
  EXPECT_EQ(*inst.multiplier, 8);
  expect_all_pass(inst);
}

TEST(Prop1, MultipliersStrictlyIncrease) {
  for (std::uint32_t b : {2u, 3u, 5u, 10u}) {
    Natural prev = 0;
    for (std::uint64_t ell = 0; ell <= 4; ++ell) {
      const auto inst = prop1_family(b, ell);
      expect_all_pass(inst);
      ASSERT_GT(*inst.multiplier, prev) << "b=" << b << " ell=" << ell;
      prev = *inst.multiplier;
    }
  }
}

TEST(Thm33, Examples) {
  auto r = thm33_identity(10, 4);
  EXPECT_EQ(r.lhs, 189981);
  EXPECT_EQ(r.rhs, 189981);
  r = thm33_identity(2, 2);
  EXPECT_EQ(r.lhs, 9);
  EXPECT_EQ(r.rhs, 9);
  r = thm33_identity(16, 3);
  EXPECT_EQ(r.lhs, 126945);
  EXPECT_EQ(r.rhs, 126945);
}

TEST(Thm33, SmallKRejectedWithErratumMessage) {
  for (std::uint64_t k : {0u, 1u}) {
    try {
      thm33_identity(10, k);
      FAIL();
    } catch (const PreconditionError& e) {
      EXPECT_NE(std::string(e.what()).find("erratum"), std::string::npos);
    }
  }
}

TEST(Thm33, IdentityOverRange) {
  for (std::uint32_t b = 2; b <= 16; ++b) {
    for (std::uint64_t k = 2; k <= 64; ++k) {
      const auto r = thm33_identity(b, k);
      ASSERT_EQ(r.lhs, r.rhs) << b << " " << k;
    }
  }
}

TEST(PalindromeMultipliers, Examples) {
  const Natural m = palindrome_multipliers(121, 10, 2, 2);
  EXPECT_EQ(m, 1001001);
  EXPECT_EQ(m * 121, 121121121);
  EXPECT_TRUE(is_palindrome(Natural(m * 121), 10));
  EXPECT_EQ(palindrome_multipliers(7, 10, 4, 0), 1);
  EXPECT_THROW(palindrome_multipliers(12, 10, 3, 1), PreconditionError);
}

TEST(FinalA, Examples) {
  auto inst = final_a(10, 3, 2);
  EXPECT_EQ(inst.n, 3003);
  EXPECT_EQ(*inst.multiplier, 500);
  expect_all_pass(inst);
  inst = final_a(2, 1, 0);
  EXPECT_EQ(inst.n, 3);
  EXPECT_EQ(*inst.multiplier, 1);
  expect_all_pass(inst);
  EXPECT_THROW(final_a(9, 1, 1), PreconditionError);
}

TEST(FinalA, Grid) {
  for (std::uint32_t b : {2u, 4u, 10u}) {
    for (std::uint64_t a : {std::uint64_t{1}, std::uint64_t{b / 2}, std::uint64_t{b - 1}}) {
      for (std::uint64_t k = 0; k <= 8; ++k) {
        const auto inst = final_a(b, a, k);
        expect_all_pass(inst);
        ASSERT_FALSE(is_niven(inst.n, b));
      }
    }
  }
}

TEST(FinalB, Examples) {
  auto inst = final_b(2, 1);
  EXPECT_EQ(inst.n, 325);
  EXPECT_EQ(*inst.multiplier, 80);
  EXPECT_EQ(check(inst, "additive identity", Semantics::strict).status(), CheckStatus::pass);
  const auto& literal = check(inst, "literal multiplier identity", Semantics::strict);
  EXPECT_FALSE(literal.holds);
  EXPECT_EQ(literal.status(), CheckStatus::erratum_expected);
  EXPECT_NE(literal.detail.find("85"), std::string::npos) << literal.detail;
  EXPECT_TRUE(inst.ok());

  inst = final_b(2, 0);
  EXPECT_EQ(inst.n, 27);
  EXPECT_EQ(*inst.multiplier, 6);
  EXPECT_TRUE(inst.ok());

  EXPECT_TRUE(final_b(4, 1).holds("additive identity"));
  EXPECT_THROW(final_b(3, 1), PreconditionError);
}

TEST(FinalB, Grid) {
  for (std::uint32_t b : {2u, 4u, 6u, 10u}) {
    for (std::uint64_t k = 0; k <= 5; ++k) {
      const auto inst = final_b(b, k);
      EXPECT_TRUE(inst.ok()) << b << " " << k;
      EXPECT_TRUE(inst.holds("additive identity"));
      EXPECT_TRUE(inst.holds("not niven"));
    }
  }
}

TEST(FinalC, Examples) {
  auto inst = final_c(2, 1);
  EXPECT_EQ(inst.n, 170);
  EXPECT_FALSE(is_niven(inst.n, 2));
  EXPECT_EQ(check(inst, "niven", Semantics::strict).status(), CheckStatus::erratum_expected);

  inst = final_c(2, 2);
  EXPECT_EQ(inst.n, 1188);
  EXPECT_TRUE(is_niven(inst.n, 2));
  EXPECT_EQ(digit_sum(inst.n, 2) * *inst.multiplier, 1152);
  EXPECT_TRUE(check(inst, "additive identity", Semantics::fixed_width).holds);

  for (std::uint32_t b : {2u, 4u, 10u}) {
    inst = final_c(b, 0);
    EXPECT_TRUE(check(inst, "additive identity", Semantics::strict).holds);
    EXPECT_EQ(check(inst, "additive identity", Semantics::strict).status(), CheckStatus::pass);
  }
  EXPECT_THROW(final_c(5, 0), PreconditionError);
}

TEST(FinalC, GridNeverFails) {
  for (std::uint32_t b : {2u, 4u, 6u, 10u}) {
    for (std::uint64_t k = 0; k <= 6; ++k) {
      const auto inst = final_c(b, k);
      EXPECT_TRUE(inst.ok()) << b << " " << k;
      EXPECT_TRUE(check(inst, "additive identity", Semantics::fixed_width).holds);
      EXPECT_EQ(check(inst, "additive identity", Semantics::strict).holds, k == 0);
      EXPECT_EQ(check(inst, "niven", Semantics::strict).holds, k >= 2);
    }
  }
}

TEST(Final2, Examples) {
  auto inst = final2(10, 1);
  EXPECT_EQ(inst.n, 86508);
  EXPECT_EQ(*inst.multiplier, 4);
  expect_all_pass(inst);
  inst = final2(4, 1);
  EXPECT_EQ(inst.n, 594);
  EXPECT_EQ(*inst.multiplier, 3);
  expect_all_pass(inst);
  inst = final2(2, 2);
  EXPECT_EQ(inst.n, 81);
  EXPECT_EQ(*inst.multiplier, 3);
  expect_all_pass(inst);
  EXPECT_THROW(final2(10, 2), PreconditionError);
  EXPECT_THROW(final2(8, 1), PreconditionError);
  EXPECT_THROW(final2(2, 3), PreconditionError);
}

TEST(Final2, MultipliersIncreaseAndIdentityHolds) {
  const std::vector<std::pair<std::uint32_t, std::vector<std::uint64_t>>> grid = {
      {4, {1, 4, 7}}, {10, {1, 4, 7}}, {16, {1, 4, 7}}, {22, {1, 4, 7}}, {2, {2, 4, 6}}};
  for (const auto& [b, ks] : grid) {
    Natural prev = 0;
    for (auto k : ks) {
      const auto inst = final2(b, k);
      expect_all_pass(inst);
      const Natural alpha = digit_sum(inst.n, b) * *inst.multiplier;
      ASSERT_EQ(alpha * reversal(alpha, b), inst.n);
      ASSERT_GT(*inst.multiplier, prev);
      prev = *inst.multiplier;
    }
  }
}

TEST(Mrh10, Examples) {
  auto inst = mrh10(Mrh10Variant::v7_2, 1);
  EXPECT_EQ(inst.n, 145314);
  EXPECT_EQ(*inst.multiplier, 39);
  inst = mrh10(Mrh10Variant::v5_4, 1);
  EXPECT_EQ(inst.n, 204120);
  EXPECT_EQ(*inst.multiplier, 56);
  inst = mrh10(Mrh10Variant::v4_5, 1);
  EXPECT_EQ(inst.n, 204120);
  EXPECT_EQ(*inst.multiplier, 45);
  EXPECT_THROW(mrh10(Mrh10Variant::v1_8, 2), PreconditionError);
  EXPECT_EQ(parse_mrh10_variant("5_4"), Mrh10Variant::v5_4);
  EXPECT_THROW(parse_mrh10_variant("3_6"), ValidationError);
}

TEST(Mrh10, Grid) {
  for (auto v : {Mrh10Variant::v7_2, Mrh10Variant::v5_4, Mrh10Variant::v4_5}) {
    for (std::uint64_t k = 1; k <= 6; ++k) expect_all_pass(mrh10(v, k));
  }
  for (std::uint64_t k : {1u, 4u, 7u}) expect_all_pass(mrh10(Mrh10Variant::v1_8, k));
}

TEST(TrivialMrh, Examples) {
  auto inst = trivial_mrh(10, 2);
  EXPECT_EQ(inst.n, 100);
  EXPECT_EQ(*inst.multiplier, 100);
  inst = trivial_mrh(2, 0);
  EXPECT_EQ(inst.n, 1);
  EXPECT_EQ(*inst.multiplier, 1);
  inst = trivial_mrh(2, 5);
  EXPECT_EQ(inst.n, 32);
  EXPECT_EQ(*inst.multiplier, 32);
  expect_all_pass(inst);
}

TEST(PalindromicMultiple, Examples) {
  auto t = palindromic_multiple(4, 10);
  EXPECT_EQ(t.p, 404);
  EXPECT_EQ(t.q_value, 1);
  EXPECT_EQ(t.palindrome, 404);
  EXPECT_EQ(t.m, 101);

  t = palindromic_multiple(3, 10);
  EXPECT_EQ(t.p, 1);
  EXPECT_EQ(t.q, 2u);
  EXPECT_EQ(t.palindrome, 111);
  EXPECT_EQ(t.m, 37);
  EXPECT_EQ(strided_repunit(10, 2, t.q), 10101);
  EXPECT_EQ(Natural(10101) / 3, 3367);

  t = palindromic_multiple(6, 10);
  EXPECT_EQ(t.p, 22);
  EXPECT_EQ(t.r, 2u);
  EXPECT_EQ(t.q, 2u);
  EXPECT_EQ(t.palindrome, 222222);
  EXPECT_EQ(t.m, 37037);

  EXPECT_THROW(palindromic_multiple(20, 10), PreconditionError);
  EXPECT_THROW(palindromic_multiple(0, 10), DomainError);
}

TEST(PalindromicMultiple, LiteralQFailsOnWitness) {
  // q = b^phi(w) - 1 = 99 with r = 2 leaves Q = 1 (mod 3).
  const auto probe = literal_q_probe(3, 10);
  EXPECT_EQ(probe.q, 99u);
  EXPECT_EQ(probe.r, 2u);
  EXPECT_EQ(probe.q_mod_w, 1u);
  EXPECT_FALSE(probe.divisible);
  EXPECT_EQ(strided_repunit(10, 2, 99) % 3, 1);
}

TEST(PalindromicMultiple, BothModesProducePalindromicMultiples) {
  for (std::uint32_t b : {2u, 3u, 10u, 12u}) {
    for (std::uint64_t n = 1; n <= 300; ++n) {
      if (n % b == 0) continue;
      for (auto mode : {PalMode::minimal_order, PalMode::paper_phi}) {
        if (mode == PalMode::paper_phi && n > 50) continue;
        const auto t = palindromic_multiple(n, b, mode);
        ASSERT_TRUE(is_palindrome(t.palindrome, b));
        ASSERT_EQ(t.palindrome % n, 0);
        ASSERT_EQ(t.m * n, t.palindrome);
        ASSERT_EQ(digit_count(t.palindrome, b), t.q * t.r + t.len_p);
      }
    }
  }
}

TEST(NivenEmbedding, Examples) {
  EXPECT_EQ(niven_with_substring(DigitString::parse("9@10")).n, 910);
  EXPECT_EQ(niven_with_substring(DigitString::parse("7@10")).n, 730);
  const auto e = niven_with_substring(DigitString::parse("1.1@2"));
  EXPECT_EQ(e.n, 6);
  EXPECT_TRUE(e.j.empty());
  EXPECT_THROW(niven_with_substring(DigitString::parse("0.1@10")), PreconditionError);
}

TEST(NivenEmbedding, RandomBlocks) {
  std::mt19937_64 rng(99);
  for (std::uint32_t b : {2u, 7u, 10u, 16u}) {
    for (int i = 0; i < 100; ++i) {
      std::vector<Digit> d(1 + rng() % 8);
      for (auto& x : d) x = static_cast<Digit>(rng() % b);
      d[0] = 1 + static_cast<Digit>(rng() % (b - 1));
      const DigitString block(b, d);
      std::vector<Natural> seen;
      for (std::uint64_t t = 0; t < 3; ++t) {
        const auto e = niven_with_substring(block, t);
        const auto& all = e.digits.digits();
        ASSERT_NE(std::search(all.begin(), all.end(), d.begin(), d.end()), all.end());
        ASSERT_EQ(digit_sum(e.n, b), power(b, e.k));
        ASSERT_TRUE(is_niven(e.n, b));
        ASSERT_EQ(std::find(seen.begin(), seen.end(), e.n), seen.end());
        seen.push_back(e.n);
      }
    }
  }
}

}  // namespace
}  // namespace rhnum
