#pragma once

// Membership in the digit-arithmetic number classes, decided by exhaustive
// witness search. This is the oracle the family generators are checked
// against, so it only uses radix/numtheory primitives and brute force.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "rhnum/errors.hpp"
#include "rhnum/numtheory.hpp"
#include "rhnum/radix.hpp"

namespace rhnum {

/// Default cap on the number of candidate products the additive search may try.
inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000ULL;

enum class SearchStatus { complete, bound_exceeded };

inline const char* to_string(SearchStatus s) {
  return s == SearchStatus::complete ? "complete" : "bound_exceeded";
}

/// Outcome of a witness search. `bound_exceeded` means "unknown", never "none".
struct MultiplierSearch {
  SearchStatus status = SearchStatus::complete;
  std::vector<Natural> multipliers;  // ascending
  std::string detail;

  bool complete() const noexcept { return status == SearchStatus::complete; }
  bool found() const noexcept { return !multipliers.empty(); }
};

/// s_b(n) | n.
inline bool is_niven(const Natural& n, Radix b) {
  if (n.sign() <= 0) throw DomainError("is_niven: n must be >= 1");
  return n % digit_sum(n, b) == 0;
}

/// s*M + (s*M)^R == n, evaluated with arbitrary-precision arithmetic.
inline bool is_additive_witness(const Natural& n, const Natural& m, Radix b) {
  const Natural p = digit_sum(n, b) * m;
  return p + reversal(p, b) == n;
}

/// s*M * (s*M)^R == n, evaluated with arbitrary-precision arithmetic.
inline bool is_multiplicative_witness(const Natural& n, const Natural& m, Radix b) {
  const Natural p = digit_sum(n, b) * m;
  return p * reversal(p, b) == n;
}

/// All M >= 1 with s*M + (s*M)^R = n. Candidate products P run over the
/// multiples of s in [s, n-1]; more than `budget` candidates is reported as
/// bound_exceeded.
inline MultiplierSearch additive_multipliers(const Natural& n, Radix b,
                                             std::uint64_t budget = kDefaultSearchBudget) {
  if (n.sign() <= 0) throw DomainError("additive_multipliers: n must be >= 1");
  MultiplierSearch out;
  const auto small = to_u64(n);
  const Natural s_big = digit_sum(n, b);
  if (!small || *small > std::numeric_limits<std::uint64_t>::max() / (2ULL * b.value()) ||
      (n - 1) / s_big > budget) {
    out.status = SearchStatus::bound_exceeded;
    out.detail = "candidate count " + Natural((n - 1) / s_big).str() + " exceeds budget " +
                 std::to_string(budget);
    return out;
  }
  const std::uint64_t target = *small;
  const auto s = static_cast<std::uint64_t>(s_big);
  for (std::uint64_t p = s; p < target; p += s) {
    if (p + reversal(p, b) == target) out.multipliers.emplace_back(p / s);
  }
  return out;
}

/// All M >= 1 with s*M * (s*M)^R = n, via divisor enumeration: P ranges over
/// divisors of n that are multiples of s. No square-root cutoff applies since
/// P can exceed sqrt(n) (e.g. P = b^k, P^R = 1). A factorization beyond `cap`
/// (see factorize) is reported as bound_exceeded.
inline MultiplierSearch multiplicative_multipliers(const Natural& n, Radix b,
                                                   std::uint64_t cap = kDefaultFactorCap) {
  if (n.sign() <= 0) throw DomainError("multiplicative_multipliers: n must be >= 1");
  MultiplierSearch out;
  Factorization f;
  try {
    f = factorize(n, cap);
  } catch (const BoundExceeded& e) {
    out.status = SearchStatus::bound_exceeded;
    out.detail = e.what();
    return out;
  }
  if (const auto small = to_u64(n)) {
    const std::uint64_t target = *small;
    const std::uint64_t s = digit_sum(target, b);
    for (std::uint64_t p : divisors(f)) {
      if (p % s == 0 && reversal(p, b) == target / p) out.multipliers.emplace_back(p / s);
    }
    return out;
  }
  const Natural s = digit_sum(n, b);
  for (const Natural& p : divisors_natural(f)) {
    if (p % s == 0 && reversal(p, b) == n / p) out.multipliers.emplace_back(p / s);
  }
  return out;
}

/// N*M is a base-b palindrome.
inline bool eqstar_check(const Natural& n, const Natural& m, Radix b) {
  if (n.sign() <= 0 || m.sign() <= 0) throw DomainError("eqstar_check: n and m must be >= 1");
  return is_palindrome(Natural(n * m), b);
}

/// Every N in [1, bound] with N*M a base-b palindrome, ascending.
inline std::vector<Natural> multiplicity_scan(const Natural& m, Radix b, std::uint64_t bound) {
  if (m.sign() <= 0) throw DomainError("multiplicity_scan: m must be >= 1");
  std::vector<Natural> out;
  const auto small = to_u64(m);
  unsigned __int128 top = small ? static_cast<unsigned __int128>(*small) * bound : 0;
  if (small && top <= std::numeric_limits<std::uint64_t>::max()) {
    for (std::uint64_t n = 1; n <= bound; ++n) {
      if (is_palindrome(n * *small, b)) out.emplace_back(n);
    }
    return out;
  }
  for (std::uint64_t n = 1; n <= bound; ++n) {
    if (is_palindrome(Natural(m * n), b)) out.emplace_back(n);
  }
  return out;
}

struct ClassifyOptions {
  std::uint64_t search_budget = kDefaultSearchBudget;
  std::uint64_t factor_cap = kDefaultFactorCap;
};

struct ClassificationReport {
  Natural n;
  Radix base = 10;
  Natural digit_sum;
  bool is_palindrome = false;
  bool niven = false;
  MultiplierSearch additive;
  MultiplierSearch multiplicative;

  bool arh() const noexcept { return additive.found(); }
  bool mrh() const noexcept { return multiplicative.found(); }
};

inline ClassificationReport classify(const Natural& n, Radix b, const ClassifyOptions& opts = {}) {
  if (n.sign() <= 0) throw DomainError("classify: n must be >= 1");
  ClassificationReport r;
  r.n = n;
  r.base = b;
  r.digit_sum = digit_sum(n, b);
  r.is_palindrome = rhnum::is_palindrome(n, b);
  r.niven = n % r.digit_sum == 0;
  r.additive = additive_multipliers(n, b, opts.search_budget);
  r.multiplicative = multiplicative_multipliers(n, b, opts.factor_cap);
  if (r.mrh() && !r.niven) {
    throw InvariantViolation("classify: " + n.str() + " is MRH but not Niven");
  }
  return r;
}

}  // namespace rhnum
