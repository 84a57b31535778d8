#pragma once

// Exact digit-level arithmetic in an arbitrary base: conversions between
// naturals and digit strings, digit sums, reversals and palindromes.

#include <algorithm>
#include <charconv>
#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "rhnum/errors.hpp"

namespace rhnum {

/// Arbitrary-precision integer. Every value the library hands out is >= 0.
using Natural = boost::multiprecision::mpz_int;

using Digit = std::uint32_t;

inline constexpr std::uint64_t kMaxBase = 65536;

/// A validated numeration base, 2 <= b <= 65536.
class Radix {
 public:
  template <std::integral I>
  constexpr Radix(I b) : value_(check(b)) {}  // NOLINT(google-explicit-constructor)

  constexpr std::uint32_t value() const noexcept { return value_; }
  constexpr operator std::uint32_t() const noexcept { return value_; }  // NOLINT

  friend constexpr bool operator==(Radix, Radix) = default;

 private:
  template <std::integral I>
  static constexpr std::uint32_t check(I b) {
    if constexpr (std::is_signed_v<I>) {
      if (b < 2) throw ValidationError("base must be >= 2, got " + std::to_string(b));
    } else {
      if (b < 2u) throw ValidationError("base must be >= 2, got " + std::to_string(b));
    }
    if (static_cast<std::uint64_t>(b) > kMaxBase) {
      throw ValidationError("base must be <= 65536, got " + std::to_string(b));
    }
    return static_cast<std::uint32_t>(b);
  }

  std::uint32_t value_;
};

namespace detail {

// Largest c with b^c <= 2^64 - 1, and b^c itself.
struct Chunk {
  unsigned width;
  std::uint64_t power;
};

inline Chunk chunk_for(Radix b) {
  Chunk c{0, 1};
  while (c.power <= std::numeric_limits<std::uint64_t>::max() / b.value()) {
    c.power *= b.value();
    ++c.width;
  }
  return c;
}

// Bases up to 62 go through GMP's text conversion (digits 0-9, A-Z, a-z).
inline constexpr std::uint32_t kTextRadixMax = 62;

// mpz_get_str writes lowercase letters for bases <= 36.
inline Digit digit_from_char(char c, std::uint32_t base) {
  if (c >= '0' && c <= '9') return static_cast<Digit>(c - '0');
  if (c >= 'A' && c <= 'Z') return static_cast<Digit>(c - 'A' + 10);
  return static_cast<Digit>(c - 'a' + (base <= 36 ? 10 : 36));
}

inline char char_from_digit(Digit d) {
  if (d < 10) return static_cast<char>('0' + d);
  if (d < 36) return static_cast<char>('A' + d - 10);
  return static_cast<char>('a' + d - 36);
}

inline void require_nonnegative(const Natural& n, const char* what) {
  if (n.sign() < 0) throw ValidationError(std::string(what) + " must be nonnegative");
}

}  // namespace detail

template <class T>
concept UnsignedValue = std::unsigned_integral<T> || std::same_as<T, Natural>;

/// Converts to uint64 when the value fits.
inline std::optional<std::uint64_t> to_u64(const Natural& n) {
  if (n.sign() < 0) return std::nullopt;
  if (n == 0) return 0;
  if (boost::multiprecision::msb(n) >= 64) return std::nullopt;
  return static_cast<std::uint64_t>(n);
}

/// Base-b digits of n, least significant first. Zero yields {0}.
inline std::vector<Digit> digits_lsb(std::uint64_t n, Radix b) {
  std::vector<Digit> out;
  do {
    out.push_back(static_cast<Digit>(n % b.value()));
    n /= b.value();
  } while (n != 0);
  return out;
}

inline std::vector<Digit> digits_lsb(Natural n, Radix b) {
  detail::require_nonnegative(n, "value");
  if (auto small = to_u64(n)) return digits_lsb(*small, b);
  if (b.value() <= detail::kTextRadixMax) {
    // GMP's subquadratic radix conversion.
    const auto* raw = n.backend().data();
    std::string text(mpz_sizeinbase(raw, static_cast<int>(b.value())) + 2, '\0');
    mpz_get_str(text.data(), static_cast<int>(b.value()), raw);
    text.resize(std::char_traits<char>::length(text.c_str()));
    std::vector<Digit> out;
    out.reserve(text.size());
    for (auto it = text.rbegin(); it != text.rend(); ++it) out.push_back(detail::digit_from_char(*it, b.value()));
    return out;
  }
  const auto chunk = detail::chunk_for(b);
  const Natural divisor = chunk.power;
  std::vector<Digit> out;
  Natural q, r;
  while (n != 0) {
    boost::multiprecision::divide_qr(n, divisor, q, r);
    auto part = static_cast<std::uint64_t>(r);
    n.swap(q);
    if (n == 0) {
      do {
        out.push_back(static_cast<Digit>(part % b.value()));
        part /= b.value();
      } while (part != 0);
    } else {
      for (unsigned i = 0; i < chunk.width; ++i) {
        out.push_back(static_cast<Digit>(part % b.value()));
        part /= b.value();
      }
    }
  }
  return out;
}

/// Horner evaluation of a most-significant-first digit sequence.
inline Natural value_of_msb(std::span<const Digit> msb_first, Radix b) {
  if (msb_first.size() > 64 && b.value() <= detail::kTextRadixMax) {
    std::string text;
    text.reserve(msb_first.size());
    for (Digit d : msb_first) text.push_back(detail::char_from_digit(d));
    Natural out;
    mpz_set_str(out.backend().data(), text.c_str(), static_cast<int>(b.value()));
    return out;
  }
  const auto chunk = detail::chunk_for(b);
  Natural acc = 0;
  std::size_t i = 0;
  while (i < msb_first.size()) {
    const std::size_t take = std::min<std::size_t>(chunk.width, msb_first.size() - i);
    std::uint64_t part = 0;
    std::uint64_t scale = 1;
    for (std::size_t j = 0; j < take; ++j) {
      part = part * b.value() + msb_first[i + j];
      scale *= b.value();
    }
    acc *= scale;
    acc += part;
    i += take;
  }
  return acc;
}

/// Base-annotated, most-significant-first digit sequence.
///
/// Leading zeros and the empty sequence are allowed so that pattern
/// expansions can be represented verbatim; `to_natural` canonicalizes and
/// rejects the empty sequence.
class DigitString {
 public:
  DigitString(Radix base, std::vector<Digit> digits) : base_(base), digits_(std::move(digits)) {
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      if (digits_[i] >= base_.value()) {
        throw ValidationError("digit " + std::to_string(digits_[i]) + " at position " +
                              std::to_string(i) + " is not < base " +
                              std::to_string(base_.value()));
      }
    }
  }

  DigitString(Radix base, std::initializer_list<Digit> digits)
      : DigitString(base, std::vector<Digit>(digits)) {}

  /// Parses "d.d.d@b", or "d.d.d" when `default_base` is given.
  static DigitString parse(std::string_view text, std::optional<Radix> default_base = std::nullopt) {
    std::optional<Radix> base = default_base;
    std::string_view body = text;
    if (auto at = text.rfind('@'); at != std::string_view::npos) {
      base = Radix(parse_number(text.substr(at + 1), at + 1, text));
      body = text.substr(0, at);
    }
    if (!base) throw ValidationError("digit string '" + std::string(text) + "' has no '@base'");
    std::vector<Digit> digits;
    std::size_t start = 0;
    while (true) {
      const auto dot = body.find('.', start);
      const auto token = body.substr(start, dot == std::string_view::npos ? dot : dot - start);
      const auto value = parse_number(token, start, text);
      if (value >= base->value()) {
        throw ValidationError("digit " + std::to_string(value) + " at position " +
                              std::to_string(digits.size()) + " is not < base " +
                              std::to_string(base->value()));
      }
      digits.push_back(static_cast<Digit>(value));
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
    return DigitString(*base, std::move(digits));
  }

  Radix base() const noexcept { return base_; }
  const std::vector<Digit>& digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }

  bool is_canonical() const noexcept {
    return !digits_.empty() && (digits_.front() != 0 || digits_.size() == 1);
  }

  /// Drops leading zeros; the empty string and all-zero strings become "0".
  DigitString canonical() const {
    auto first = std::find_if(digits_.begin(), digits_.end(), [](Digit d) { return d != 0; });
    if (first == digits_.end()) return DigitString(base_, std::vector<Digit>{0});
    return DigitString(base_, std::vector<Digit>(first, digits_.end()));
  }

  /// Dotted digits without the base suffix, e.g. "1.0.8".
  std::string digits_text() const {
    std::string out;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      if (i) out += '.';
      out += std::to_string(digits_[i]);
    }
    return out;
  }

  /// Wire format, e.g. "1.0.8@10".
  std::string to_string() const { return digits_text() + "@" + std::to_string(base_.value()); }

  friend bool operator==(const DigitString&, const DigitString&) = default;

 private:
  static std::uint64_t parse_number(std::string_view token, std::size_t offset, std::string_view whole) {
    std::uint64_t value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (token.empty() || ec != std::errc() || ptr != end) {
      throw ValidationError("malformed digit string '" + std::string(whole) + "' at offset " +
                            std::to_string(offset));
    }
    return value;
  }

  Radix base_;
  std::vector<Digit> digits_;
};

/// [x]_b: the value of a digit string. Leading zeros contribute nothing.
inline Natural to_natural(const DigitString& ds) {
  if (ds.empty()) throw ValidationError("empty digit string has no numeric value");
  return value_of_msb(ds.digits(), ds.base());
}

/// Canonical base-b representation of n.
inline DigitString from_natural(const Natural& n, Radix base) {
  auto d = digits_lsb(n, base);
  std::reverse(d.begin(), d.end());
  return DigitString(base, std::move(d));
}

inline DigitString from_natural(std::uint64_t n, Radix base) {
  auto d = digits_lsb(n, base);
  std::reverse(d.begin(), d.end());
  return DigitString(base, std::move(d));
}

/// Number of digits in the canonical representation (1 for zero).
template <UnsignedValue T>
std::size_t digit_count(const T& n, Radix b) {
  if constexpr (std::same_as<T, Natural>) {
    if (auto small = to_u64(n)) return digit_count(*small, b);
    return digits_lsb(n, b).size();
  } else {
    std::size_t len = 1;
    std::uint64_t v = n;
    while (v >= b.value()) {
      v /= b.value();
      ++len;
    }
    return len;
  }
}

/// s_b(n).
template <UnsignedValue T>
T digit_sum(T n, Radix b) {
  if constexpr (std::same_as<T, Natural>) {
    detail::require_nonnegative(n, "value");
    if (auto small = to_u64(n)) return Natural(digit_sum(*small, b));
    Natural total = 0;
    for (Digit d : digits_lsb(n, b)) total += d;
    return total;
  } else {
    T total = 0;
    while (n != 0) {
      total += static_cast<T>(n % b.value());
      n /= b.value();
    }
    return total;
  }
}

/// n^R with strict semantics: leading zeros created by the reversal vanish.
/// The uint64 overload requires the result to fit, which holds whenever
/// n < 2^64 / b (reversal never adds digits).
template <UnsignedValue T>
T reversal(T n, Radix b) {
  if constexpr (std::same_as<T, Natural>) {
    detail::require_nonnegative(n, "value");
    if (auto small = to_u64(n); small && *small <= std::numeric_limits<std::uint64_t>::max() / b.value()) {
      return Natural(reversal(*small, b));
    }
    const auto lsb = digits_lsb(n, b);
    return value_of_msb(lsb, b);
  } else {
    T out = 0;
    while (n != 0) {
      out = out * b.value() + n % b.value();
      n /= b.value();
    }
    return out;
  }
}

/// Reverses the width-padded digit string of n (leading zeros included).
inline Natural reversal_fixed_width(const Natural& n, Radix b, std::size_t width) {
  auto lsb = digits_lsb(n, b);
  if (n == 0) lsb.clear();
  if (lsb.size() > width) {
    throw ValidationError("width " + std::to_string(width) + " is smaller than the " +
                          std::to_string(lsb.size()) + " digits of the value");
  }
  if (width == 0) return 0;
  lsb.resize(width, 0);
  return value_of_msb(lsb, b);
}

template <UnsignedValue T>
bool is_palindrome(const T& n, Radix b) {
  if constexpr (std::same_as<T, Natural>) {
    if (auto small = to_u64(n)) return is_palindrome(*small, b);
    const auto d = digits_lsb(n, b);
    return std::equal(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(d.size() / 2), d.rbegin());
  } else {
    Digit buf[64];
    std::size_t len = 0;
    std::uint64_t v = n;
    do {
      buf[len++] = static_cast<Digit>(v % b.value());
      v /= b.value();
    } while (v != 0);
    for (std::size_t i = 0; i < len / 2; ++i) {
      if (buf[i] != buf[len - 1 - i]) return false;
    }
    return true;
  }
}

/// Digit-level concatenation. All parts must share one base; at least one
/// part is required so that the base is known.
inline DigitString concat(std::span<const DigitString> parts) {
  if (parts.empty()) throw ValidationError("concat needs at least one part");
  const Radix base = parts.front().base();
  std::vector<Digit> out;
  for (const auto& p : parts) {
    if (p.base() != base) {
      throw ValidationError("base mismatch in concat: " + std::to_string(base.value()) + " vs " +
                            std::to_string(p.base().value()));
    }
    out.insert(out.end(), p.digits().begin(), p.digits().end());
  }
  return DigitString(base, std::move(out));
}

inline DigitString concat(const DigitString& a, const DigitString& b) {
  const DigitString parts[] = {a, b};
  return concat(parts);
}

/// (x)^k. repeat(x, 0) is the empty string.
inline DigitString repeat(const DigitString& x, std::size_t k) {
  std::vector<Digit> out;
  out.reserve(x.size() * k);
  for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), x.digits().begin(), x.digits().end());
  return DigitString(x.base(), std::move(out));
}

/// b^e as a Natural.
inline Natural power(Radix b, std::uint64_t e) {
  return boost::multiprecision::pow(Natural(b.value()), static_cast<unsigned>(e));
}

inline std::string to_string(const Natural& n) { return n.str(); }

}  // namespace rhnum
