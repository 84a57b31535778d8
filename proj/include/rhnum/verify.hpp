#pragma once

// Replays every family at desk scale and cross-checks it against the
// brute-force classifier. Reports are deterministic: entries come out in
// parameter order.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rhnum/classify.hpp"
#include "rhnum/families.hpp"
#include "rhnum/numtheory.hpp"
#include "rhnum/radix.hpp"

namespace rhnum {

struct ReportEntry {
  std::string family_id;
  std::string params;
  std::vector<Check> checks;
};

struct VerificationReport {
  std::string suite;
  std::vector<ReportEntry> entries;

  std::size_t count(CheckStatus s) const {
    std::size_t total = 0;
    for (const auto& e : entries) {
      total += static_cast<std::size_t>(
          std::count_if(e.checks.begin(), e.checks.end(), [s](const Check& c) { return c.status() == s; }));
    }
    return total;
  }
  std::size_t passed() const { return count(CheckStatus::pass); }
  std::size_t failed() const { return count(CheckStatus::fail); }
  std::size_t errata() const { return count(CheckStatus::erratum_expected); }
};

/// Instances whose n is at most this are re-discovered by the classifier.
inline constexpr std::uint64_t kOracleLimit = 100'000;

inline std::string format_params(const Params& params) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += ',';
    out += name + "=" + std::to_string(value);
  }
  return out;
}

namespace detail {

inline Check oracle_check(const FamilyInstance& inst, Radix b, bool additive) {
  Check c{additive ? "oracle finds additive M" : "oracle finds multiplicative M", false};
  const auto search = additive ? additive_multipliers(inst.n, b) : multiplicative_multipliers(inst.n, b);
  if (!search.complete()) {
    c.detail = search.detail;
    return c;
  }
  c.holds = std::find(search.multipliers.begin(), search.multipliers.end(), *inst.multiplier) !=
            search.multipliers.end();
  c.detail = std::to_string(search.multipliers.size()) + " witness(es)";
  return c;
}

inline void add_instance(VerificationReport& report, const FamilyInstance& inst, Radix b,
                         std::optional<bool> oracle_additive = std::nullopt) {
  ReportEntry e{to_string(inst.family), format_params(inst.params), inst.checks};
  if (oracle_additive && inst.multiplier && inst.n <= kOracleLimit) {
    e.checks.push_back(oracle_check(inst, b, *oracle_additive));
  }
  report.entries.push_back(std::move(e));
}

inline Check increasing_check(const std::vector<Natural>& seq, const std::string& what) {
  bool ok = true;
  for (std::size_t i = 1; i < seq.size(); ++i) ok = ok && seq[i - 1] < seq[i];
  std::string detail;
  for (const auto& m : seq) detail += (detail.empty() ? "" : ",") + m.str();
  return {what + " strictly increasing", ok, true, Semantics::strict, detail};
}

inline bool is_prime(std::uint64_t p) { return p >= 2 && factorize(p) == Factorization{{p, 1}}; }

}  // namespace detail

inline void suite_thm1(VerificationReport& r) {
  const std::pair<unsigned, unsigned> grid[] = {{3, 1}, {4, 2}, {10, 2}, {13, 3}};
  for (auto [b, alpha] : grid) {
    for (unsigned ell = 0; ell <= 3; ++ell) detail::add_instance(r, thm1_family(b, alpha, ell), b, true);
  }
}

inline void suite_prop1(VerificationReport& r) {
  for (unsigned b : {2u, 3u, 5u, 10u}) {
    std::vector<Natural> ms;
    for (unsigned ell = 0; ell <= 4; ++ell) {
      auto inst = prop1_family(b, ell);
      ms.push_back(*inst.multiplier);
      detail::add_instance(r, inst, b, true);
    }
    r.entries.push_back({"prop1", "b=" + std::to_string(b) + ",ell=0..4", {detail::increasing_check(ms, "multipliers")}});
  }
}

inline void suite_thm33(VerificationReport& r) {
  for (unsigned b : {2u, 3u, 10u, 16u}) {
    for (unsigned k = 0; k <= 1; ++k) {
      Check c{"k accepted", true, false};
      try {
        thm33_identity(b, k);
      } catch (const PreconditionError& e) {
        c.holds = false;
        c.detail = e.what();
      }
      r.entries.push_back({"thm33", "b=" + std::to_string(b) + ",k=" + std::to_string(k), {c}});
    }
    for (unsigned k = 2; k <= 64; ++k) detail::add_instance(r, thm33_family(b, k), b);
  }
}

inline ReportEntry palmul_entry(std::uint64_t n, Radix b, PalMode mode) {
  ReportEntry e{"pal_mult", "b=" + std::to_string(b.value()) + ",n=" + std::to_string(n) + ",mode=" + to_string(mode), {}};
  try {
    const auto t = palindromic_multiple(n, b, mode);
    e.checks.push_back({"palindrome", is_palindrome(t.palindrome, b)});
    e.checks.push_back({"n divides palindrome", t.palindrome % n == 0, true, Semantics::strict,
                        "M = " + (t.m < Natural(1'000'000'000) ? t.m.str() : "<" + std::to_string(digit_count(t.m, b)) + " digits>")});
    e.checks.push_back({"w divides q+1", (t.q + 1) % t.split.w == 0});
  } catch (const Error& err) {
    e.checks.push_back({"construction succeeded", false, true, Semantics::strict, err.what()});
  }
  return e;
}

inline void suite_palmul(VerificationReport& r) {
  for (unsigned b : {2u, 3u, 10u, 12u}) {
    for (std::uint64_t n = 1; n <= 500; ++n) {
      if (n % b != 0) r.entries.push_back(palmul_entry(n, b, PalMode::minimal_order));
    }
    for (std::uint64_t n = 1; n <= 50; ++n) {
      if (n % b != 0) r.entries.push_back(palmul_entry(n, b, PalMode::paper_phi));
    }
  }
  const auto probe = literal_q_probe(3, 10);
  r.entries.push_back({"pal_mult", "b=10,n=3,literal_q",
                       {{"literal q = b^phi(w)-1 gives w | Q", probe.divisible, false, Semantics::strict,
                         "r = " + std::to_string(probe.r) + ", q = " + std::to_string(probe.q) +
                             ", Q mod w = " + std::to_string(probe.q_mod_w)}}});
}

inline void suite_corollary(VerificationReport& r) {
  for (unsigned b : {10u, 2u}) {
    for (std::uint64_t p = 2; p <= 97; ++p) {
      if (!detail::is_prime(p) || p == b) continue;
      const auto t = palindromic_multiple(p, b);
      r.entries.push_back({"corollary", "b=" + std::to_string(b) + ",p=" + std::to_string(p),
                           {{"p divides a palindrome", is_palindrome(t.palindrome, b) && t.palindrome % p == 0}}});
    }
  }
  // A prime base never divides its own palindromes (they end in a nonzero digit).
  bool any = false;
  for (std::uint64_t v = 1; v <= (1u << 16); ++v) any = any || (is_palindrome(v, 2) && v % 2 == 0);
  r.entries.push_back({"corollary", "b=2,p=2",
                       {{"p = b divides some palindrome <= 2^16", any, false, Semantics::strict,
                         "excluded: base-b palindromes end in a nonzero digit"}}});
}

inline void suite_final_a(VerificationReport& r) {
  for (unsigned b : {2u, 4u, 10u}) {
    std::set<unsigned> as{1u, b / 2, b - 1};
    for (unsigned a : as) {
      for (unsigned k = 0; k <= 8; ++k) detail::add_instance(r, final_a(b, a, k), b, true);
    }
  }
}

inline void suite_final_b(VerificationReport& r) {
  for (unsigned b : {2u, 4u}) {
    for (unsigned k = 0; k <= 4; ++k) detail::add_instance(r, final_b(b, k), b, true);
  }
}

inline void suite_final_c(VerificationReport& r) {
  for (unsigned b : {2u, 4u}) {
    for (unsigned k = 0; k <= 4; ++k) {
      auto inst = final_c(b, k);
      // The multiplier is a strict-semantics witness only at k = 0.
      detail::add_instance(r, inst, b, k == 0 ? std::optional<bool>(true) : std::nullopt);
    }
  }
}

inline void suite_final2(VerificationReport& r) {
  for (unsigned b : {4u, 10u, 16u, 22u}) {
    std::vector<Natural> ms;
    for (unsigned k : {1u, 4u, 7u}) {
      auto inst = final2(b, k);
      ms.push_back(*inst.multiplier);
      detail::add_instance(r, inst, b, false);
    }
    r.entries.push_back({"final2_a", "b=" + std::to_string(b) + ",k=1,4,7", {detail::increasing_check(ms, "multipliers")}});
  }
  std::vector<Natural> ms;
  for (unsigned k : {2u, 4u, 6u}) {
    auto inst = final2(2, k);
    ms.push_back(*inst.multiplier);
    detail::add_instance(r, inst, 2, false);
  }
  r.entries.push_back({"final2_b", "b=2,k=2,4,6", {detail::increasing_check(ms, "multipliers")}});
}

inline void suite_mrh10(VerificationReport& r) {
  for (auto v : {Mrh10Variant::v7_2, Mrh10Variant::v5_4, Mrh10Variant::v4_5}) {
    for (unsigned k = 1; k <= 6; ++k) detail::add_instance(r, mrh10(v, k), 10, false);
  }
  for (unsigned k : {1u, 4u, 7u}) detail::add_instance(r, mrh10(Mrh10Variant::v1_8, k), 10, false);
}

inline void suite_trivial_mrh(VerificationReport& r) {
  for (unsigned b : {2u, 10u}) {
    for (unsigned k = 0; k <= 20; ++k) {
      auto inst = trivial_mrh(b, k);
      ReportEntry e{to_string(inst.family), format_params(inst.params), inst.checks};
      if (inst.n <= kDefaultFactorCap) e.checks.push_back(detail::oracle_check(inst, b, false));
      r.entries.push_back(std::move(e));
    }
  }
}

/// Seeded random digit blocks with a nonzero leading digit.
inline std::vector<DigitString> random_blocks(Radix b, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len(1, 8);
  std::uniform_int_distribution<Digit> any(0, b.value() - 1);
  std::uniform_int_distribution<Digit> lead(1, b.value() - 1);
  std::vector<DigitString> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Digit> d{lead(rng)};
    for (std::size_t j = 1, n = len(rng); j < n; ++j) d.push_back(any(rng));
    out.emplace_back(b, std::move(d));
  }
  return out;
}

inline void suite_niven_embed(VerificationReport& r) {
  for (const Radix b : {2u, 7u, 10u, 16u}) {
    std::size_t bad = 0;
    std::size_t not_distinct = 0;
    std::string first_bad;
    for (const auto& block : random_blocks(b, 200, 0x5eed0000 + b.value())) {
      std::set<Natural> members;
      for (unsigned t = 0; t <= 2; ++t) {
        const auto e = niven_with_substring(block, t);
        const auto digits = from_natural(e.n, b).digits();
        const bool contains = std::search(digits.begin(), digits.end(), block.digits().begin(),
                                          block.digits().end()) != digits.end();
        const Natural s = digit_sum(e.n, b);
        Natural pw = 1;
        while (pw < s) pw *= b.value();
        if (!contains || pw != s || e.n % s != 0) {
          ++bad;
          if (first_bad.empty()) first_bad = block.to_string();
        }
        members.insert(e.n);
      }
      if (members.size() != 3) ++not_distinct;
    }
    r.entries.push_back({"niven_embed", "b=" + std::to_string(b.value()) + ",strings=200,t=0..2",
                         {{"contains I, digit sum is a power of b, niven", bad == 0, true, Semantics::strict,
                           bad ? "first failure " + first_bad : ""},
                          {"three distinct members per I", not_distinct == 0}}});
  }
}

inline void suite_eqstar(VerificationReport& r) {
  auto inst = pal_mult_family(121, 10, 2, 2);
  detail::add_instance(r, inst, 10);
  const auto scan = multiplicity_scan(1, 10, 100);
  r.entries.push_back({"eqstar", "m=1,b=10,bound=100",
                       {{"18 palindromes up to 100", scan.size() == 18, true, Semantics::strict,
                         std::to_string(scan.size()) + " found"}}});
  r.entries.push_back({"eqstar", "n=19,m=9999,b=10", {{"19*9999 is a palindrome", eqstar_check(19, 9999, 10)}}});
}

inline void suite_classify(VerificationReport& r) {
  for (unsigned b : {2u, 10u}) {
    std::size_t violations = 0;
    std::size_t mrh = 0;
    for (std::uint64_t n = 1; n <= 20000; ++n) {
      const auto m = multiplicative_multipliers(n, b);
      if (m.found()) {
        ++mrh;
        if (!is_niven(n, b)) ++violations;
      }
    }
    r.entries.push_back({"classify", "b=" + std::to_string(b) + ",n<=20000",
                         {{"MRH implies Niven", violations == 0, true, Semantics::strict,
                           std::to_string(mrh) + " MRH numbers, " + std::to_string(violations) + " exceptions"}}});
  }
  const auto c = classify(1729, 10);
  r.entries.push_back({"classify", "n=1729,b=10",
                       {{"1729 is MRH with M = 1", c.multiplicative.multipliers == std::vector<Natural>{1}},
                        {"1729 is Niven", c.niven}}});
}

struct SuiteSpec {
  const char* id;
  void (*run)(VerificationReport&);
};

inline constexpr SuiteSpec kSuites[] = {
    {"thm1", suite_thm1},           {"prop1", suite_prop1},
    {"thm33", suite_thm33},         {"palmul", suite_palmul},
    {"corollary", suite_corollary}, {"final_a", suite_final_a},
    {"final_b", suite_final_b},     {"final_c", suite_final_c},
    {"final2", suite_final2},       {"mrh10", suite_mrh10},
    {"trivial_mrh", suite_trivial_mrh}, {"niven_embed", suite_niven_embed},
    {"eqstar", suite_eqstar},       {"classify", suite_classify},
};

inline std::vector<std::string> suite_ids() {
  std::vector<std::string> out;
  for (const auto& s : kSuites) out.emplace_back(s.id);
  out.emplace_back("all");
  return out;
}

/// Runs one suite by id, or every suite for "all".
inline VerificationReport run_suite(std::string_view id) {
  VerificationReport report{std::string(id), {}};
  bool matched = false;
  for (const auto& s : kSuites) {
    if (id == "all" || id == s.id) {
      s.run(report);
      matched = true;
    }
  }
  if (!matched) throw ValidationError("unknown suite '" + std::string(id) + "'");
  return report;
}

}  // namespace rhnum
