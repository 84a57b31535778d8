#pragma once

// Repetition-notation digit templates such as "[1.(0)^k.8]@10".
//
//   pattern := '[' seq ']' '@' nat
//   seq     := item ('.' item)*
//   item    := nat | ident | '(' seq ')' '^' exp
//   exp     := nat | ident
//
// Whitespace is insignificant. An identifier in digit position is a digit
// variable; in exponent position it is a repetition count.

#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rhnum/errors.hpp"
#include "rhnum/radix.hpp"

namespace rhnum {

/// Name bound at expansion time. Counts feed exponents, digits feed digit slots.
struct Bindings {
  std::map<std::string, std::uint64_t, std::less<>> counts;
  std::map<std::string, std::uint64_t, std::less<>> digits;
};

/// Expansions longer than this are refused.
inline constexpr std::uint64_t kMaxExpansionDigits = 50'000'000;

class PatternTemplate {
 public:
  struct Item;
  using Sequence = std::vector<Item>;

  struct Literal {
    Digit value;
    friend bool operator==(const Literal&, const Literal&) = default;
  };
  struct DigitVar {
    std::string name;
    friend bool operator==(const DigitVar&, const DigitVar&) = default;
  };
  using Exponent = std::variant<std::uint64_t, std::string>;
  struct Group {
    std::shared_ptr<const Sequence> items;
    Exponent exponent;
    friend bool operator==(const Group& a, const Group& b) {
      return *a.items == *b.items && a.exponent == b.exponent;
    }
  };
  struct Item {
    std::variant<Literal, DigitVar, Group> node;
    friend bool operator==(const Item&, const Item&) = default;
  };

  PatternTemplate(Radix base, Sequence items) : base_(base), items_(std::move(items)) {}

  Radix base() const noexcept { return base_; }
  const Sequence& items() const noexcept { return items_; }

  /// Canonical text, e.g. "[1.(0)^k.8]@10".
  std::string render() const { return "[" + render_seq(items_) + "]@" + std::to_string(base_.value()); }

  std::set<std::string> count_variables() const {
    std::set<std::string> out;
    collect(items_, &out, nullptr);
    return out;
  }

  std::set<std::string> digit_variables() const {
    std::set<std::string> out;
    collect(items_, nullptr, &out);
    return out;
  }

  friend bool operator==(const PatternTemplate&, const PatternTemplate&) = default;

 private:
  static std::string render_seq(const Sequence& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (i) out += '.';
      std::visit(
          [&out](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Literal>) {
              out += std::to_string(node.value);
            } else if constexpr (std::is_same_v<T, DigitVar>) {
              out += node.name;
            } else {
              out += "(" + render_seq(*node.items) + ")^";
              if (auto* c = std::get_if<std::uint64_t>(&node.exponent)) {
                out += std::to_string(*c);
              } else {
                out += std::get<std::string>(node.exponent);
              }
            }
          },
          seq[i].node);
    }
    return out;
  }

  static void collect(const Sequence& seq, std::set<std::string>* counts, std::set<std::string>* digits) {
    for (const auto& item : seq) {
      if (auto* v = std::get_if<DigitVar>(&item.node)) {
        if (digits) digits->insert(v->name);
      } else if (auto* g = std::get_if<Group>(&item.node)) {
        if (auto* name = std::get_if<std::string>(&g->exponent); name && counts) counts->insert(*name);
        collect(*g->items, counts, digits);
      }
    }
  }

  Radix base_;
  Sequence items_;
};

namespace detail {

class PatternParser {
 public:
  explicit PatternParser(std::string_view text) : text_(text) {}

  PatternTemplate parse() {
    expect('[');
    // The base comes last in the text but literals are validated against it,
    // so locate it first.
    const auto close = text_.rfind(']');
    if (close == std::string_view::npos) throw ParseError(text_.size(), "missing ']'");
    PatternParser tail(text_);
    tail.pos_ = close + 1;
    tail.expect('@');
    const auto base_pos = tail.position();
    const auto raw_base = tail.number();
    tail.skip_ws();
    if (!tail.at_end()) throw ParseError(tail.pos_, "trailing input after base");
    if (raw_base < 2 || raw_base > kMaxBase) {
      throw ParseError(base_pos, "base must be in [2, 65536], got " + std::to_string(raw_base));
    }
    base_ = raw_base;

    auto items = sequence();
    skip_ws();
    if (pos_ != close) throw ParseError(pos_, "expected '.' or ']'");
    return PatternTemplate(Radix(base_), std::move(items));
  }

 private:
  PatternTemplate::Sequence sequence() {
    PatternTemplate::Sequence seq;
    seq.push_back(item());
    while (peek() == '.') {
      ++pos_;
      seq.push_back(item());
    }
    return seq;
  }

  PatternTemplate::Item item() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto at = position();
      const auto v = number();
      if (v >= base_) {
        throw ParseError(at, "digit " + std::to_string(v) + " is not < base " + std::to_string(base_));
      }
      return {PatternTemplate::Literal{static_cast<Digit>(v)}};
    }
    if (is_ident_start(c)) return {PatternTemplate::DigitVar{ident()}};
    if (c == '(') {
      ++pos_;
      auto inner = sequence();
      expect(')');
      expect('^');
      PatternTemplate::Exponent exp;
      const char e = peek();
      if (std::isdigit(static_cast<unsigned char>(e))) {
        exp = number();
      } else if (is_ident_start(e)) {
        exp = ident();
      } else {
        throw ParseError(pos_, "expected exponent (number or identifier)");
      }
      return {PatternTemplate::Group{std::make_shared<const PatternTemplate::Sequence>(std::move(inner)),
                                     std::move(exp)}};
    }
    throw ParseError(pos_, c == '\0' ? "unexpected end of pattern" : std::string("unexpected '") + c + "'");
  }

  static bool is_ident_start(char c) { return c >= 'a' && c <= 'z'; }

  std::string ident() {
    skip_ws();
    const auto start = pos_;
    while (pos_ < text_.size() && (std::islower(static_cast<unsigned char>(text_[pos_])) ||
                                   std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t number() {
    skip_ws();
    const auto start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto d = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (UINT64_MAX - d) / 10) throw ParseError(start, "number too large");
      v = v * 10 + d;
      ++pos_;
    }
    if (pos_ == start) throw ParseError(start, "expected a number");
    return v;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(pos_, std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::size_t position() {
    skip_ws();
    return pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::uint64_t base_ = kMaxBase + 1;
};

inline void expand_into(const PatternTemplate::Sequence& seq, Radix base, const Bindings& b,
                        std::vector<Digit>& out) {
  for (const auto& item : seq) {
    if (auto* lit = std::get_if<PatternTemplate::Literal>(&item.node)) {
      out.push_back(lit->value);
    } else if (auto* var = std::get_if<PatternTemplate::DigitVar>(&item.node)) {
      auto it = b.digits.find(var->name);
      if (it == b.digits.end()) throw ValidationError("unbound digit variable '" + var->name + "'");
      if (it->second >= base.value()) {
        throw ValidationError("digit variable '" + var->name + "' = " + std::to_string(it->second) +
                              " is not < base " + std::to_string(base.value()));
      }
      out.push_back(static_cast<Digit>(it->second));
    } else {
      const auto& g = std::get<PatternTemplate::Group>(item.node);
      std::uint64_t times = 0;
      if (auto* c = std::get_if<std::uint64_t>(&g.exponent)) {
        times = *c;
      } else {
        const auto& name = std::get<std::string>(g.exponent);
        auto it = b.counts.find(name);
        if (it == b.counts.end()) throw ValidationError("unbound count variable '" + name + "'");
        times = it->second;
      }
      if (times == 0) continue;
      const auto mark = out.size();
      expand_into(*g.items, base, b, out);
      const auto block = out.size() - mark;
      if (block != 0 && (times - 1) > (kMaxExpansionDigits - out.size()) / block) {
        throw BoundExceeded("pattern expansion exceeds " + std::to_string(kMaxExpansionDigits) + " digits");
      }
      const std::vector<Digit> once(out.begin() + static_cast<std::ptrdiff_t>(mark), out.end());
      for (std::uint64_t i = 1; i < times; ++i) out.insert(out.end(), once.begin(), once.end());
    }
  }
}

}  // namespace detail

/// Parses the textual template; literal digits are checked against the base.
inline PatternTemplate parse_pattern(std::string_view text) { return detail::PatternParser(text).parse(); }

/// Flat digit string. May carry leading zeros or be empty; to_natural
/// canonicalizes and rejects the empty case.
inline DigitString expand(const PatternTemplate& t, const Bindings& bindings = {}) {
  std::vector<Digit> out;
  detail::expand_into(t.items(), t.base(), bindings, out);
  return DigitString(t.base(), std::move(out));
}

}  // namespace rhnum
