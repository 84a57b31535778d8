#pragma once

// Constructive generators for the infinite families of b-Niven, b-ARH and
// b-MRH numbers, the palindromic-multiple construction and the Niven
// substring embedding. Every generated instance carries the identities it
// claims, each re-checked with exact arithmetic at generation time.
//
// Some literal statements of these constructions are off by a term. Each
// generator computes the corrected construction and, where the literal
// variant is cheap to evaluate, records it as a check with expected = false
// so the discrepancy stays visible in reports.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rhnum/classify.hpp"
#include "rhnum/errors.hpp"
#include "rhnum/numtheory.hpp"
#include "rhnum/pattern.hpp"
#include "rhnum/radix.hpp"

namespace rhnum {

enum class FamilyId {
  thm1,
  prop1,
  thm33,
  final_a,
  final_b,
  final_c,
  final2_a,
  final2_b,
  mrh10,
  pal_mult_family,
  trivial_mrh,
};

inline const char* to_string(FamilyId id) {
  switch (id) {
    case FamilyId::thm1: return "thm1";
    case FamilyId::prop1: return "prop1";
    case FamilyId::thm33: return "thm33";
    case FamilyId::final_a: return "final_a";
    case FamilyId::final_b: return "final_b";
    case FamilyId::final_c: return "final_c";
    case FamilyId::final2_a: return "final2_a";
    case FamilyId::final2_b: return "final2_b";
    case FamilyId::mrh10: return "mrh10";
    case FamilyId::pal_mult_family: return "pal_mult_family";
    case FamilyId::trivial_mrh: return "trivial_mrh";
  }
  return "?";
}

/// Which reversal a check used.
enum class Semantics { strict, fixed_width };

inline const char* to_string(Semantics s) { return s == Semantics::strict ? "strict" : "fixed_width"; }

enum class CheckStatus { pass, fail, erratum_expected };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::erratum_expected: return "ERRATUM_EXPECTED";
  }
  return "?";
}

/// One exactly-evaluated identity. `expected == false` marks a literal
/// statement known to be wrong; it must evaluate false to count as such.
struct Check {
  std::string name;
  bool holds = false;
  bool expected = true;
  Semantics semantics = Semantics::strict;
  std::string detail;

  CheckStatus status() const noexcept {
    if (holds != expected) return CheckStatus::fail;
    return expected ? CheckStatus::pass : CheckStatus::erratum_expected;
  }
};

using Params = std::vector<std::pair<std::string, std::uint64_t>>;

struct FamilyInstance {
  FamilyId family = FamilyId::thm1;
  Params params;
  Natural n;
  std::optional<Natural> multiplier;
  std::vector<Check> checks;

  bool ok() const noexcept {
    return std::none_of(checks.begin(), checks.end(),
                        [](const Check& c) { return c.status() == CheckStatus::fail; });
  }

  const Check* find(std::string_view name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }

  bool holds(std::string_view name) const {
    const auto* c = find(name);
    if (!c) throw Error("no check named '" + std::string(name) + "'");
    return c->holds;
  }
};

namespace detail {

inline Natural bracket(const std::string& text, const Bindings& bindings = {}) {
  return to_natural(expand(parse_pattern(text), bindings));
}

inline std::string at(Radix b) { return "]@" + std::to_string(b.value()); }

inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, const char* what) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (out > kMaxExpansionDigits / base) throw BoundExceeded(std::string(what) + " is too large");
    out *= base;
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// b-ARH families built from (1 alpha)^k

/// N_k = [(1 alpha)^k]_b with k = (1+alpha)^ell, for b = 2+alpha (mod 2+2alpha).
/// N_k/2 is a palindrome equal to s_b(N_k) * M.
inline FamilyInstance thm1_family(Radix b, std::uint64_t alpha, std::uint64_t ell) {
  if (b.value() == 2) throw PreconditionError("thm1: base 2 is not covered by this family");
  if (alpha < 1) throw PreconditionError("thm1: alpha must be >= 1");
  if (b.value() < alpha + 1) throw PreconditionError("thm1: need b >= alpha + 1");
  const std::uint64_t modulus = 2 + 2 * alpha;
  if (b.value() % modulus != (2 + alpha) % modulus) {
    throw PreconditionError("thm1: need b = " + std::to_string(2 + alpha) + " (mod " + std::to_string(modulus) +
                            "), but b mod " + std::to_string(modulus) + " = " +
                            std::to_string(b.value() % modulus));
  }
  const std::uint64_t k = detail::checked_pow(1 + alpha, ell, "thm1: k = (1+alpha)^ell");

  FamilyInstance inst;
  inst.family = FamilyId::thm1;
  inst.params = {{"b", b.value()}, {"alpha", alpha}, {"ell", ell}, {"k", k}};
  inst.n = detail::bracket("[(1." + std::to_string(alpha) + ")^k" + detail::at(b), {{{"k", k}}, {}});

  // s_b(N_k) = k (1+alpha); N_k/2 summed as a geometric series.
  const Natural s = Natural(k) * (1 + alpha);
  const Natural bb = Natural(b.value()) * b.value();
  const Natural half = Natural((b.value() + alpha) / 2) * ((power(b, 2 * k) - 1) / (bb - 1));

  inst.checks.push_back({"digit sum equals k(1+alpha)", digit_sum(inst.n, b) == s});
  inst.checks.push_back({"geometric series equals N/2", half * 2 == inst.n});
  const bool divides = half % s == 0;
  inst.checks.push_back({"s divides N/2", divides});
  const Natural m = half / s;
  inst.multiplier = m;
  const Natural product = s * m;
  inst.checks.push_back({"s*M = N/2", divides && product * 2 == inst.n});
  inst.checks.push_back({"s*M is a palindrome", reversal(product, b) == product});
  inst.checks.push_back({"additive identity", product + reversal(product, b) == inst.n});
  inst.checks.push_back({"niven", is_niven(inst.n, b)});
  return inst;
}

inline FamilyInstance final_a(Radix b, std::uint64_t a, std::uint64_t k);

/// Distinct additive multipliers for every base: the thm1 family with
/// alpha = b-2 for b >= 3 (cross-checked against the closed form of M), and
/// the [1 0^ell 1]_2 family for b = 2.
inline FamilyInstance prop1_family(Radix b, std::uint64_t ell) {
  if (b.value() == 2) {
    auto inst = final_a(b, 1, ell);
    inst.family = FamilyId::prop1;
    inst.params = {{"b", 2}, {"ell", ell}, {"a", 1}, {"k", ell}};
    return inst;
  }
  auto inst = thm1_family(b, b.value() - 2, ell);
  const std::uint64_t k = detail::checked_pow(b.value() - 1, ell, "prop1: k");
  inst.family = FamilyId::prop1;
  inst.params = {{"b", b.value()}, {"ell", ell}, {"alpha", b.value() - 2}, {"k", k}};

  // M = (b^(2(b-1)^ell) - 1) / ((b-1)^ell (b^2 - 1))
  const Natural numer = power(b, 2 * k) - 1;
  const Natural denom = boost::multiprecision::pow(Natural(b.value() - 1), static_cast<unsigned>(ell)) *
                        (Natural(b.value()) * b.value() - 1);
  const bool exact = numer % denom == 0;
  inst.checks.push_back({"closed-form multiplier", exact && numer / denom == *inst.multiplier,
                         true, Semantics::strict, "M = " + inst.multiplier->str()});
  return inst;
}

// ---------------------------------------------------------------------------
// Reversal-product equation N*M = (N*M)^R

struct Thm33Result {
  Natural lhs;
  Natural rhs;
};

/// [1 (b-1)]_b * [(b-1)^k]_b and [1 (b-2) (b-1)^(k-2) (b-2) 1]_b. The
/// right-hand pattern only makes sense for k >= 2.
inline Thm33Result thm33_identity(Radix b, std::uint64_t k) {
  if (k < 2) {
    throw PreconditionError("thm33: k = " + std::to_string(k) +
                            " rejected; the right-hand pattern needs k >= 2 (the stated range "
                            "'for all k >= 0' is an erratum)");
  }
  const auto bm1 = std::to_string(b.value() - 1);
  const auto bm2 = std::to_string(b.value() - 2);
  Thm33Result r;
  r.lhs = detail::bracket("[1." + bm1 + detail::at(b)) *
          detail::bracket("[(" + bm1 + ")^k" + detail::at(b), {{{"k", k}}, {}});
  r.rhs = detail::bracket("[1." + bm2 + ".(" + bm1 + ")^j." + bm2 + ".1" + detail::at(b), {{{"j", k - 2}}, {}});
  return r;
}

inline FamilyInstance thm33_family(Radix b, std::uint64_t k) {
  const auto r = thm33_identity(b, k);
  FamilyInstance inst;
  inst.family = FamilyId::thm33;
  inst.params = {{"b", b.value()}, {"k", k}};
  inst.n = 2 * Natural(b.value()) - 1;
  inst.checks.push_back({"lhs = rhs", r.lhs == r.rhs, true, Semantics::strict, r.lhs.str() + " vs " + r.rhs.str()});
  inst.checks.push_back({"product is a palindrome", is_palindrome(r.lhs, b)});
  return inst;
}

/// M = [(1 0^ell)^p 1]_b for a palindrome n with ell >= len(n) - 1: the
/// product n*M is p+1 non-overlapping copies of n.
inline Natural palindrome_multipliers(const Natural& n, Radix b, std::uint64_t ell, std::uint64_t p) {
  if (n.sign() <= 0) throw DomainError("palindrome_multipliers: n must be >= 1");
  if (!is_palindrome(n, b)) throw PreconditionError("palindrome_multipliers: " + n.str() + " is not a palindrome");
  if (ell + 1 < digit_count(n, b)) {
    throw PreconditionError("palindrome_multipliers: need ell >= " + std::to_string(digit_count(n, b) - 1));
  }
  return detail::bracket("[(1.(0)^l)^p.1" + detail::at(b), {{{"l", ell}, {"p", p}}, {}});
}

inline FamilyInstance pal_mult_family(const Natural& n, Radix b, std::uint64_t ell, std::uint64_t p) {
  FamilyInstance inst;
  inst.family = FamilyId::pal_mult_family;
  inst.params = {{"b", b.value()}, {"ell", ell}, {"p", p}};
  inst.n = n;
  inst.multiplier = palindrome_multipliers(n, b, ell, p);
  inst.checks.push_back({"N*M is a palindrome", eqstar_check(n, *inst.multiplier, b), true, Semantics::strict,
                         Natural(n * *inst.multiplier).str()});
  return inst;
}

// ---------------------------------------------------------------------------
// Even-base b-ARH families

inline void require_even_base(Radix b, const char* who) {
  if (b.value() % 2 != 0) {
    throw PreconditionError(std::string(who) + ": base must be even, got " + std::to_string(b.value()));
  }
}

/// N_k = [a 0^k a]_b: b-ARH with M = [a 0^(k+1)]_b / (2a), never b-Niven.
inline FamilyInstance final_a(Radix b, std::uint64_t a, std::uint64_t k) {
  require_even_base(b, "final_a");
  if (a < 1 || a >= b.value()) throw PreconditionError("final_a: need 1 <= a <= b-1");
  FamilyInstance inst;
  inst.family = FamilyId::final_a;
  inst.params = {{"b", b.value()}, {"a", a}, {"k", k}};
  const Bindings bind{{{"k", k}, {"j", k + 1}}, {{"a", a}}};
  inst.n = detail::bracket("[a.(0)^k.a" + detail::at(b), bind);
  const Natural shifted = detail::bracket("[a.(0)^j" + detail::at(b), bind);
  const Natural s = digit_sum(inst.n, b);
  inst.checks.push_back({"digit sum is 2a", s == 2 * a});
  inst.multiplier = shifted / s;
  const Natural product = s * *inst.multiplier;
  inst.checks.push_back({"2a divides [a 0^(k+1)]", product == shifted});
  inst.checks.push_back({"additive identity", product + reversal(product, b) == inst.n});
  inst.checks.push_back({"not niven", !is_niven(inst.n, b)});
  return inst;
}

/// N_k = [(1 0^k)^b 0 (0^k 1)^b]_b. The multiplier needs kb+b trailing zeros;
/// the literal kb-zero multiplier is evaluated too and expected to fail.
inline FamilyInstance final_b(Radix b, std::uint64_t k) {
  require_even_base(b, "final_b");
  FamilyInstance inst;
  inst.family = FamilyId::final_b;
  inst.params = {{"b", b.value()}, {"k", k}};
  const auto bs = std::to_string(b.value());
  inst.n = detail::bracket("[(1.(0)^k)^" + bs + ".0.((0)^k.1)^" + bs + detail::at(b), {{{"k", k}}, {}});
  const Natural s = digit_sum(inst.n, b);
  inst.checks.push_back({"digit sum is 2b", s == 2 * Natural(b.value())});

  const auto multiplier_for = [&](std::uint64_t zeros) -> std::optional<Natural> {
    const Natural x = detail::bracket("[(1.(0)^k)^" + bs + ".(0)^z" + detail::at(b), {{{"k", k}, {"z", zeros}}, {}});
    if (x % 2 != 0) return std::nullopt;
    return x / 2;
  };
  const auto identity = [&](const std::optional<Natural>& m) {
    if (!m) return false;
    const Natural product = s * *m;
    return product + reversal(product, b) == inst.n;
  };

  const auto corrected = multiplier_for(k * b.value() + b.value());
  if (!corrected) throw InvariantViolation("final_b: corrected multiplier is not an integer");
  inst.multiplier = corrected;
  inst.checks.push_back({"additive identity", identity(corrected), true, Semantics::strict,
                         "M = [(1 0^k)^b 0^(kb+b)]/2 = " + corrected->str()});

  const auto literal = multiplier_for(k * b.value());
  std::string detail = "M = [(1 0^k)^b 0^(kb)]/2";
  if (literal) {
    const Natural product = s * *literal;
    detail += " = " + literal->str() + ": " + product.str() + " + " + reversal(product, b).str() + " = " +
              Natural(product + reversal(product, b)).str() + " vs N = " + inst.n.str();
  } else {
    detail += " is not an integer";
  }
  inst.checks.push_back({"literal multiplier identity", identity(literal), false, Semantics::strict, detail});
  inst.checks.push_back({"not niven", !is_niven(inst.n, b)});
  return inst;
}

/// N_k = [(0^k 1)^b 0 (1 0^k)^b]_b with candidate product
/// X = [(0^k 1)^b 0^(b(k+1)+1)]_b, checked under both reversal semantics.
/// Strict reversal only works at k = 0 and the Niven property only holds
/// from k = 2 on; those outcomes are recorded as expected errata.
inline FamilyInstance final_c(Radix b, std::uint64_t k) {
  require_even_base(b, "final_c");
  FamilyInstance inst;
  inst.family = FamilyId::final_c;
  inst.params = {{"b", b.value()}, {"k", k}};
  const auto bs = std::to_string(b.value());
  const Bindings bind{{{"k", k}, {"z", b.value() * (k + 1) + 1}}, {}};
  inst.n = detail::bracket("[((0)^k.1)^" + bs + ".0.(1.(0)^k)^" + bs + detail::at(b), bind);
  const Natural x = detail::bracket("[((0)^k.1)^" + bs + ".(0)^z" + detail::at(b), bind);
  const Natural s = digit_sum(inst.n, b);
  inst.checks.push_back({"digit sum is 2b", s == 2 * Natural(b.value())});
  inst.checks.push_back({"2b divides X", x % s == 0});
  inst.multiplier = x / s;

  const std::size_t width = 2 * b.value() * (k + 1) + 1;
  const Natural fixed = reversal_fixed_width(x, b, width);
  inst.checks.push_back({"additive identity", x + fixed == inst.n, true, Semantics::fixed_width,
                         x.str() + " + " + fixed.str() + " (width " + std::to_string(width) + ")"});
  const Natural strict = reversal(x, b);
  inst.checks.push_back({"additive identity", x + strict == inst.n, k == 0, Semantics::strict,
                         x.str() + " + " + strict.str()});
  inst.checks.push_back({"niven", is_niven(inst.n, b), k >= 2, Semantics::strict,
                         "s = " + s.str() + ", N mod s = " + Natural(inst.n % s).str()});
  return inst;
}

// ---------------------------------------------------------------------------
// b-MRH families N = alpha * alpha^R

namespace detail {

inline void mrh_checks(FamilyInstance& inst, const Natural& alpha, Radix b) {
  inst.n = alpha * reversal(alpha, b);
  const Natural s = digit_sum(inst.n, b);
  const bool divides = alpha % s == 0;
  inst.checks.push_back({"s divides alpha", divides, true, Semantics::strict,
                         "alpha = " + alpha.str() + ", s = " + s.str()});
  inst.multiplier = alpha / s;
  const Natural product = s * *inst.multiplier;
  inst.checks.push_back({"s*M = alpha", product == alpha});
  inst.checks.push_back({"multiplicative identity", product * reversal(product, b) == inst.n});
}

}  // namespace detail

/// alpha_k = [1 0^k (b-2)]_b for even b >= 4 with b = 1 (mod 3), k = 1 (mod 3);
/// alpha_k = [1 0^k 1]_2 for b = 2 and even k. N_k = alpha_k alpha_k^R is b-MRH.
inline FamilyInstance final2(Radix b, std::uint64_t k) {
  FamilyInstance inst;
  inst.params = {{"b", b.value()}, {"k", k}};
  if (b.value() == 2) {
    if (k < 2 || k % 2 != 0) throw PreconditionError("final2 (b = 2): k must be even and >= 2");
    inst.family = FamilyId::final2_b;
    detail::mrh_checks(inst, detail::bracket("[1.(0)^k.1]@2", {{{"k", k}}, {}}), b);
    inst.checks.push_back({"digit sum is 3", digit_sum(inst.n, b) == 3});
    const Natural closed = (power(b, k + 1) + 1) / 3;
    inst.checks.push_back({"closed-form multiplier", closed == *inst.multiplier});
    return inst;
  }
  if (b.value() < 4 || b.value() % 2 != 0) throw PreconditionError("final2: base must be 2 or even >= 4");
  if (b.value() % 3 != 1) throw PreconditionError("final2: need b = 1 (mod 3)");
  if (k < 1 || k % 3 != 1) throw PreconditionError("final2: need k >= 1 and k = 1 (mod 3)");
  inst.family = FamilyId::final2_a;
  detail::mrh_checks(inst,
                     detail::bracket("[1.(0)^k." + std::to_string(b.value() - 2) + detail::at(b), {{{"k", k}}, {}}),
                     b);
  const std::uint64_t expected_s = b.value() == 4 ? 6 : 3 * (b.value() - 1);
  inst.checks.push_back({"digit sum is " + std::to_string(expected_s), digit_sum(inst.n, b) == expected_s});
  const Natural closed = b.value() == 4 ? Natural((power(b, k + 1) + 2) / 6)
                                        : Natural((power(b, k + 1) + b.value() - 2) / (3 * (b.value() - 1)));
  inst.checks.push_back({"closed-form multiplier", closed == *inst.multiplier});
  return inst;
}

enum class Mrh10Variant { v1_8, v7_2, v5_4, v4_5 };

inline const char* to_string(Mrh10Variant v) {
  switch (v) {
    case Mrh10Variant::v1_8: return "1_8";
    case Mrh10Variant::v7_2: return "7_2";
    case Mrh10Variant::v5_4: return "5_4";
    case Mrh10Variant::v4_5: return "4_5";
  }
  return "?";
}

inline Mrh10Variant parse_mrh10_variant(std::string_view text) {
  for (auto v : {Mrh10Variant::v1_8, Mrh10Variant::v7_2, Mrh10Variant::v5_4, Mrh10Variant::v4_5}) {
    if (text == to_string(v)) return v;
  }
  throw ValidationError("unknown mrh10 variant '" + std::string(text) + "' (expected 1_8, 7_2, 5_4 or 4_5)");
}

/// alpha_k = [x 0^k y]_10 for (x, y) in {(1,8), (7,2), (5,4), (4,5)}.
inline FamilyInstance mrh10(Mrh10Variant variant, std::uint64_t k) {
  if (k < 1) throw PreconditionError("mrh10: k must be >= 1");
  if (variant == Mrh10Variant::v1_8 && k % 3 != 1) throw PreconditionError("mrh10 (1_8): need k = 1 (mod 3)");
  const std::string name = to_string(variant);
  const std::uint64_t lead = static_cast<std::uint64_t>(name[0] - '0');
  const std::uint64_t tail = static_cast<std::uint64_t>(name[2] - '0');
  FamilyInstance inst;
  inst.family = FamilyId::mrh10;
  inst.params = {{"b", 10}, {"lead", lead}, {"tail", tail}, {"k", k}};
  detail::mrh_checks(inst, detail::bracket("[x.(0)^k.y]@10", {{{"k", k}}, {{"x", lead}, {"y", tail}}}), 10);
  return inst;
}

/// [1 0^k]_b = b^k with M = b^k: s = 1 and (s M)^R = 1.
inline FamilyInstance trivial_mrh(Radix b, std::uint64_t k) {
  FamilyInstance inst;
  inst.family = FamilyId::trivial_mrh;
  inst.params = {{"b", b.value()}, {"k", k}};
  inst.n = detail::bracket("[1.(0)^k" + detail::at(b), {{{"k", k}}, {}});
  inst.multiplier = inst.n;
  inst.checks.push_back({"digit sum is 1", digit_sum(inst.n, b) == 1});
  inst.checks.push_back({"multiplicative identity", is_multiplicative_witness(inst.n, *inst.multiplier, b)});
  return inst;
}

// ---------------------------------------------------------------------------
// Palindromic multiples

enum class PalMode { paper_phi, minimal_order };

inline const char* to_string(PalMode m) { return m == PalMode::paper_phi ? "paper_phi" : "minimal_order"; }

struct PalindromicMultipleTrace {
  std::uint64_t n = 0;
  Radix base = 10;
  BaseSplit split;
  std::size_t len_core = 0;  // digits of L = split.core (0 when core = 1)
  Natural p;                 // [L^R 0^(m - len L) L]_b, or 1 when core = 1
  std::size_t len_p = 0;
  std::uint64_t period = 0;  // phi(w) or ord_w(b), depending on mode
  std::uint64_t r = 0;
  std::uint64_t q = 0;
  Natural q_value;           // Q = strided_repunit(b, r, q)
  Natural palindrome;        // P * Q
  Natural m;                 // palindrome / n
  PalMode mode = PalMode::minimal_order;
};

/// A base-b palindrome divisible by n, for any n with b not dividing n.
///
/// n = L * w with L built from primes of b and gcd(w, b) = 1. P is a
/// palindrome divisible by L; Q = sum_{i<=q} b^(ir) has q+1 ones at stride
/// r >= len(P), so P*Q is q+1 spaced copies of P. With b^r = 1 (mod w),
/// Q = q+1 (mod w), hence q = w-1.
inline PalindromicMultipleTrace palindromic_multiple(const Natural& n_in, Radix b,
                                                     PalMode mode = PalMode::minimal_order,
                                                     std::uint64_t cap = kDefaultFactorCap) {
  if (n_in.sign() <= 0) throw DomainError("palindromic_multiple: n must be >= 1");
  const auto small = to_u64(n_in);
  if (!small || *small > cap) throw BoundExceeded("palindromic_multiple: n exceeds the factorization cap");
  const std::uint64_t n = *small;
  if (n % b.value() == 0) {
    throw PreconditionError("palindromic_multiple: base " + std::to_string(b.value()) + " divides " +
                            std::to_string(n) + "; every multiple then ends in 0 and has a shorter reversal");
  }

  PalindromicMultipleTrace t;
  t.n = n;
  t.base = b;
  t.mode = mode;
  t.split = split_by_base(n, b);

  if (t.split.core == 1) {
    t.p = 1;
  } else {
    const auto core = from_natural(t.split.core, b);
    t.len_core = core.size();
    if (t.split.m < t.len_core) throw InvariantViolation("palindromic_multiple: m < len(L)");
    std::vector<Digit> digits(core.digits().rbegin(), core.digits().rend());
    digits.insert(digits.end(), t.split.m - t.len_core, 0);
    digits.insert(digits.end(), core.digits().begin(), core.digits().end());
    t.p = value_of_msb(digits, b);
  }
  t.len_p = digit_count(t.p, b);

  t.period = mode == PalMode::paper_phi ? euler_phi(t.split.w) : multiplicative_order(b.value(), t.split.w);
  const std::uint64_t floor_len = std::max<std::uint64_t>(t.len_p, 1);
  t.r = (floor_len + t.period - 1) / t.period * t.period;
  t.q = t.split.w - 1;
  if (t.q != 0 && t.r > (kMaxExpansionDigits - t.len_p) / t.q) {
    throw BoundExceeded("palindromic_multiple: Q would have more than " + std::to_string(kMaxExpansionDigits) +
                        " digits");
  }
  t.q_value = strided_repunit(b, t.r, t.q);
  t.palindrome = t.p * t.q_value;

  if (!is_palindrome(t.palindrome, b)) throw InvariantViolation("palindromic_multiple: result is not a palindrome");
  if (t.palindrome % n != 0) throw InvariantViolation("palindromic_multiple: n does not divide the result");
  if (digit_count(t.palindrome, b) != t.q * t.r + t.len_p) {
    throw InvariantViolation("palindromic_multiple: unexpected result length");
  }
  t.m = t.palindrome / n;
  return t;
}

/// The unmodified choice q = b^phi(w) - 1 with r the least multiple of
/// phi(w) exceeding len(P). Q mod w is accumulated term by term.
struct LiteralQProbe {
  std::uint64_t w = 0;
  std::uint64_t phi = 0;
  std::uint64_t r = 0;
  std::uint64_t q = 0;
  std::uint64_t q_mod_w = 0;  // Q_{r,q} mod w
  bool divisible = false;
};

inline LiteralQProbe literal_q_probe(const Natural& n, Radix b, std::uint64_t max_terms = 100'000'000ULL) {
  const auto t = palindromic_multiple(n, b, PalMode::paper_phi);
  LiteralQProbe probe;
  probe.w = t.split.w;
  probe.phi = euler_phi(probe.w);
  probe.r = (t.len_p / probe.phi + 1) * probe.phi;
  const Natural q = power(b, probe.phi) - 1;
  if (q > max_terms) throw BoundExceeded("literal_q_probe: q = " + q.str() + " terms is over budget");
  probe.q = static_cast<std::uint64_t>(q);
  const std::uint64_t step = pow_mod(b.value(), probe.r, probe.w);
  std::uint64_t term = 1 % probe.w;
  std::uint64_t sum = 0;
  for (std::uint64_t i = 0; i <= probe.q; ++i) {
    sum = (sum + term) % probe.w;
    term = mul_mod(term, step, probe.w);
  }
  probe.q_mod_w = sum;
  probe.divisible = sum == 0;
  return probe;
}

// ---------------------------------------------------------------------------
// Niven numbers containing a prescribed digit block

struct NivenEmbedding {
  Natural n;
  std::uint64_t k = 0;   // s_b(n) = b^k
  DigitString j;         // filler block
  DigitString digits;    // I J 0^k
};

/// N = [I J 0^k]_b where J tops the digit sum of I up to b^k. The smallest
/// k >= 1 with b^k >= s_b(I) is used, shifted by `variant` to get distinct
/// members.
inline NivenEmbedding niven_with_substring(const DigitString& block, std::uint64_t variant = 0) {
  const Radix b = block.base();
  if (block.empty()) throw PreconditionError("niven_with_substring: block must be nonempty");
  if (block.digits().front() == 0) throw PreconditionError("niven_with_substring: block has a leading zero");
  Natural s = 0;
  for (Digit d : block.digits()) s += d;
  std::uint64_t k = 1;
  while (power(b, k) < s) ++k;
  k += variant;

  const Natural deficit = power(b, k) - s;
  const Natural nines = deficit / (b.value() - 1);
  if (nines > kMaxExpansionDigits) throw BoundExceeded("niven_with_substring: filler block too long");
  std::vector<Digit> filler(static_cast<std::size_t>(nines), b.value() - 1);
  if (const auto rest = static_cast<Digit>(deficit % (b.value() - 1)); rest != 0) filler.push_back(rest);

  NivenEmbedding out{0, k, DigitString(b, filler), DigitString(b, {})};
  std::vector<Digit> all = block.digits();
  all.insert(all.end(), filler.begin(), filler.end());
  all.insert(all.end(), k, 0);
  out.digits = DigitString(b, std::move(all));
  out.n = to_natural(out.digits);

  const auto& d = out.digits.digits();
  if (std::search(d.begin(), d.end(), block.digits().begin(), block.digits().end()) == d.end() ||
      digit_sum(out.n, b) != power(b, k) || out.n % power(b, k) != 0) {
    throw InvariantViolation("niven_with_substring: construction postcondition failed");
  }
  return out;
}

}  // namespace rhnum
