#pragma once

// Elementary number theory at desk scale: trial-division factorization,
// Euler's totient, multiplicative order, and the split of n into the part
// built from primes of the base and the part coprime to it.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "rhnum/errors.hpp"
#include "rhnum/radix.hpp"

namespace rhnum {

/// prime -> exponent. The empty map is the factorization of 1.
using Factorization = std::map<std::uint64_t, unsigned>;

/// Default factorization cap. Trial division runs up to sqrt(cap), so every
/// n <= cap factors completely, and so does any larger n whose cofactor left
/// after removing primes <= sqrt(cap) is at most cap.
inline constexpr std::uint64_t kDefaultFactorCap = 1'000'000'000'000ULL;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

namespace detail {

inline std::uint64_t trial_limit(std::uint64_t cap) {
  // Capped at 2^32 - 1 so an accepted prime cofactor (< limit^2) fits 64 bits.
  const auto root = boost::multiprecision::sqrt(Natural(cap)).convert_to<std::uint64_t>();
  return std::clamp<std::uint64_t>(root, 1, 0xFFFF'FFFFULL);
}

inline void trial_divide(std::uint64_t& n, std::uint64_t from, std::uint64_t limit, Factorization& f) {
  for (std::uint64_t p = from; p <= limit && p <= n / p; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  }
}

[[noreturn]] inline void factor_cap_exceeded(const std::string& n, std::uint64_t cap) {
  throw BoundExceeded("factorize: " + n + " has a cofactor with no prime factor <= sqrt(" + std::to_string(cap) +
                      ") that exceeds the cap");
}

}  // namespace detail

inline Factorization factorize(std::uint64_t n, std::uint64_t cap = kDefaultFactorCap) {
  if (n == 0) throw DomainError("factorize: n must be >= 1");
  const std::uint64_t original = n;
  const std::uint64_t limit = detail::trial_limit(cap);
  Factorization f;
  detail::trial_divide(n, 2, limit, f);
  if (n > 1) {
    // A cofactor below limit*(limit+1) has no room for two primes > limit.
    if (n > cap && n / limit > limit) detail::factor_cap_exceeded(std::to_string(original), cap);
    ++f[n];
  }
  return f;
}

inline Factorization factorize(const Natural& n_in, std::uint64_t cap = kDefaultFactorCap) {
  if (n_in.sign() <= 0) throw DomainError("factorize: n must be >= 1");
  if (const auto small = to_u64(n_in)) return factorize(*small, cap);
  const std::uint64_t limit = detail::trial_limit(cap);
  Factorization f;
  Natural n = n_in;
  std::uint64_t p = 2;
  for (; p <= limit; p += (p == 2 ? 1 : 2)) {
    if (to_u64(n)) break;
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  }
  auto rest = to_u64(n);
  if (!rest) detail::factor_cap_exceeded(n_in.str(), cap);
  detail::trial_divide(*rest, p, limit, f);
  if (*rest > 1) {
    if (*rest > cap && *rest / limit > limit) detail::factor_cap_exceeded(n_in.str(), cap);
    ++f[*rest];
  }
  return f;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw DomainError("euler_phi: n must be >= 1");
  std::uint64_t phi = n;
  for (const auto& [p, e] : factorize(n, UINT64_MAX)) phi = phi / p * (p - 1);
  return phi;
}

/// All divisors of the factored number, ascending. The number must fit 64 bits;
/// see divisors_natural otherwise.
inline std::vector<std::uint64_t> divisors(const Factorization& f) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : f) {
    const auto existing = out.size();
    std::uint64_t pk = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < existing; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Natural> divisors_natural(const Factorization& f) {
  std::vector<Natural> out{1};
  for (const auto& [p, e] : f) {
    const auto existing = out.size();
    Natural pk = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < existing; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Least t >= 1 with b^t = 1 (mod w).
inline std::uint64_t multiplicative_order(std::uint64_t b, std::uint64_t w) {
  if (w == 0) throw DomainError("multiplicative_order: modulus must be >= 1");
  if (w == 1) return 1;
  if (std::gcd(b, w) != 1) {
    throw DomainError("multiplicative_order: gcd(" + std::to_string(b) + ", " + std::to_string(w) + ") != 1");
  }
  // Start from phi(w) and strip prime factors while b^t stays 1.
  std::uint64_t t = euler_phi(w);
  for (const auto& [p, e] : factorize(t, UINT64_MAX)) {
    for (unsigned i = 0; i < e && t % p == 0 && pow_mod(b, t / p, w) == 1; ++i) t /= p;
  }
  return t;
}

/// n = core * w with core built only from primes of the base and gcd(w, b) = 1.
struct BaseSplit {
  std::uint64_t core = 1;
  std::uint64_t w = 1;
  std::map<std::uint64_t, unsigned> betas;  // prime of b -> exact multiplicity in n
  unsigned m = 0;                           // max beta, 0 when core = 1
};

inline BaseSplit split_by_base(std::uint64_t n, Radix base) {
  if (n == 0) throw DomainError("split_by_base: n must be >= 1");
  BaseSplit s;
  s.w = n;
  for (const auto& [p, e] : factorize(base.value())) {
    unsigned beta = 0;
    while (s.w % p == 0) {
      s.w /= p;
      s.core *= p;
      ++beta;
    }
    if (beta) {
      s.betas[p] = beta;
      s.m = std::max(s.m, beta);
    }
  }
  return s;
}

/// Q_{r,q} = sum_{i=0..q} b^(i r): q+1 ones at stride r.
inline Natural strided_repunit(Radix base, std::uint64_t r, std::uint64_t q) {
  if (r == 0) throw DomainError("strided_repunit: stride must be >= 1");
  const std::uint64_t len = q * r + 1;
  if (q != 0 && (len - 1) / q != r) throw BoundExceeded("strided_repunit: length overflow");
  std::vector<Digit> msb(len, 0);
  for (std::uint64_t i = 0; i <= q; ++i) msb[i * r] = 1;
  return value_of_msb(msb, base);
}

}  // namespace rhnum
