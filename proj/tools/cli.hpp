#pragma once

// Command-line front end. Kept in a header so the test suite can drive
// `run` in-process.

#include <algorithm>
#include <cctype>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rhnum/rhnum.hpp"

namespace rhnum::cli {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

/// Naturals that fit in uint64 become JSON numbers, larger ones decimal strings.
inline Json to_json(const Natural& n) {
  if (auto small = to_u64(n)) return *small;
  return n.str();
}

inline Json to_json(const std::vector<Natural>& v) {
  Json arr = Json::array();
  for (const auto& n : v) arr.push_back(to_json(n));
  return arr;
}

inline Json to_json(const Params& params) {
  Json obj = Json::object();
  for (const auto& [name, value] : params) obj[name] = value;
  return obj;
}

/// Writes one record per line in the chosen format. CSV prints the header
/// (the record's keys) before the first row.
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, Format format) : out_(out), format_(format) {}

  void write(const Json& record) {
    switch (format_) {
      case Format::json:
        out_ << record.dump() << '\n';
        break;
      case Format::text: {
        bool first = true;
        for (const auto& [key, value] : record.items()) {
          if (!first) out_ << ' ';
          first = false;
          out_ << key << '=' << scalar(value, ",");
        }
        out_ << '\n';
        break;
      }
      case Format::csv: {
        if (!header_done_) {
          bool first = true;
          for (const auto& [key, value] : record.items()) {
            out_ << (first ? "" : ",") << key;
            first = false;
          }
          out_ << '\n';
          header_done_ = true;
        }
        bool first = true;
        for (const auto& [key, value] : record.items()) {
          out_ << (first ? "" : ",") << quote(scalar(value, ";"));
          first = false;
        }
        out_ << '\n';
        break;
      }
    }
  }

 private:
  static std::string scalar(const Json& v, const char* sep) {
    if (v.is_null()) return "unknown";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + scalar(v[i], sep);
      return out;
    }
    if (v.is_object()) {
      std::string out;
      for (const auto& [key, value] : v.items()) out += (out.empty() ? "" : sep) + key + ":" + scalar(value, sep);
      return out;
    }
    return v.dump();
  }

  static std::string quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + '"';
  }

  std::ostream& out_;
  Format format_;
  bool header_done_ = false;
};

inline Natural parse_natural(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw ValidationError("'" + text + "' is not a nonnegative decimal integer");
  }
  return Natural(text);
}

inline Natural parse_positive(const std::string& text) {
  Natural n = parse_natural(text);
  if (n == 0) throw ValidationError("'" + text + "' must be >= 1");
  return n;
}

struct Common {
  std::uint64_t base = 10;
  std::string format = "text";
  std::uint64_t limit = kDefaultSearchBudget;
};

inline void add_common(CLI::App* sub, Common& common, bool with_limit = true) {
  sub->add_option("--base", common.base, "Numeration base (2..65536)")->capture_default_str();
  sub->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  if (with_limit) sub->add_option("--limit", common.limit, "Search budget")->capture_default_str();
}

inline Format to_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  return Format::text;
}

inline Json check_json(const Check& c) {
  return Json{{"name", c.name}, {"semantics", to_string(c.semantics)}, {"status", to_string(c.status())},
              {"detail", c.detail}};
}

inline Json family_record(const FamilyInstance& inst, std::optional<Semantics> only = std::nullopt) {
  Json checks = Json::array();
  bool fail = false;
  for (const auto& c : inst.checks) {
    if (only && c.name == "additive identity" && c.semantics != *only) continue;
    checks.push_back(check_json(c));
    fail = fail || c.status() == CheckStatus::fail;
  }
  return Json{{"family", to_string(inst.family)},
              {"params", to_json(inst.params)},
              {"n", to_json(inst.n)},
              {"multiplier", inst.multiplier ? to_json(*inst.multiplier) : Json(nullptr)},
              {"status", fail ? "FAIL" : "PASS"},
              {"checks", checks}};
}

/// Runs the CLI. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact digit-arithmetic toolkit for b-Niven and Ramanujan-Hardy numbers", "rhnum"};
  app.require_subcommand(1);
  Common common;

  // classify / search-add / search-mul
  std::vector<std::string> numbers;
  auto* classify_cmd = app.add_subcommand("classify", "Niven/ARH/MRH status with all multiplier witnesses");
  classify_cmd->add_option("n", numbers, "Numbers to classify (decimal)")->required();
  add_common(classify_cmd, common);

  std::string number;
  auto* add_cmd = app.add_subcommand("search-add", "All additive multipliers of n");
  add_cmd->add_option("n", number, "Number (decimal)")->required();
  add_common(add_cmd, common);

  std::uint64_t factor_cap = kDefaultFactorCap;
  auto* mul_cmd = app.add_subcommand("search-mul", "All multiplicative multipliers of n");
  mul_cmd->add_option("n", number, "Number (decimal)")->required();
  add_common(mul_cmd, common, false);
  mul_cmd->add_option("--limit", factor_cap, "Factorization cap")->capture_default_str();

  std::string second;
  auto* eqstar_cmd = app.add_subcommand("eqstar", "Is N*M a palindrome?");
  eqstar_cmd->add_option("n", number, "N (decimal)")->required();
  eqstar_cmd->add_option("m", second, "M (decimal)")->required();
  add_common(eqstar_cmd, common, false);

  auto* scan_cmd = app.add_subcommand("scan-multiplicity", "All N <= --limit with N*M a palindrome");
  scan_cmd->add_option("m", number, "Multiplier M (decimal)")->required();
  add_common(scan_cmd, common, false);
  std::uint64_t scan_bound = 1000;
  scan_cmd->add_option("--limit", scan_bound, "Scan bound")->capture_default_str();

  // family
  std::string family_id;
  std::uint64_t alpha = 1, ell = 0, k = 0, digit_a = 1, copies = 0;
  std::string variant = "7_2", semantics_name, family_n;
  auto* family_cmd = app.add_subcommand("family", "Generate and check one member of a family");
  family_cmd->add_option("id", family_id, "Family id")
      ->required()
      ->check(CLI::IsMember({"thm1", "prop1", "thm33", "final-a", "final-b", "final-c", "final2", "mrh10",
                             "trivial-mrh", "pal-mult"}));
  family_cmd->add_option("--alpha", alpha, "alpha (thm1)");
  family_cmd->add_option("--ell", ell, "ell (thm1, prop1, pal-mult)");
  family_cmd->add_option("-k", k, "k");
  family_cmd->add_option("-a", digit_a, "digit a (final-a)");
  family_cmd->add_option("-p", copies, "copies p (pal-mult)");
  family_cmd->add_option("-n", family_n, "palindrome n (pal-mult)");
  family_cmd->add_option("--variant", variant, "mrh10 variant: 1_8, 7_2, 5_4, 4_5");
  family_cmd->add_option("--semantics", semantics_name, "final-c: strict or fixed")
      ->check(CLI::IsMember({"strict", "fixed"}));
  add_common(family_cmd, common, false);

  // palmul
  std::string mode_name = "minimal";
  auto* palmul_cmd = app.add_subcommand("palmul", "A palindrome divisible by n (base must not divide n)");
  palmul_cmd->add_option("n", number, "n (decimal)")->required();
  palmul_cmd->add_option("--mode", mode_name, "paper or minimal")
      ->check(CLI::IsMember({"paper", "minimal"}))
      ->capture_default_str();
  add_common(palmul_cmd, common, false);

  // embed-niven
  std::uint64_t embed_variant = 0;
  auto* embed_cmd = app.add_subcommand("embed-niven", "A b-Niven number containing a digit block");
  embed_cmd->add_option("block", number, "Digit block, e.g. 9 or 1.1@2")->required();
  embed_cmd->add_option("--variant", embed_variant, "Member index t >= 0")->capture_default_str();
  add_common(embed_cmd, common, false);

  // pattern-eval
  std::vector<std::string> binds;
  auto* pattern_cmd = app.add_subcommand("pattern-eval", "Expand a digit pattern such as [1.(0)^k.8]@10");
  pattern_cmd->add_option("pattern", number, "Pattern")->required();
  pattern_cmd->add_option("--bind", binds, "name=value (repeatable)");
  add_common(pattern_cmd, common, false);

  // verify
  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
  verify_cmd->add_option("--suite", suite, "Suite id")->check(CLI::IsMember(suite_ids()))->capture_default_str();
  add_common(verify_cmd, common, false);

  std::vector<const char*> argv{"rhnum"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kUsage;
  }

  RecordWriter writer(out, to_format(common.format));
  try {
    const Radix base(common.base);

    if (*classify_cmd) {
      ClassifyOptions opts;
      opts.search_budget = common.limit;
      bool all_complete = true;
      for (const auto& text : numbers) {
        const auto r = classify(parse_positive(text), base, opts);
        std::string detail = r.additive.detail;
        if (!r.multiplicative.detail.empty()) detail += (detail.empty() ? "" : "; ") + r.multiplicative.detail;
        const bool complete = r.additive.complete() && r.multiplicative.complete();
        writer.write(Json{{"n", to_json(r.n)},
                          {"base", base.value()},
                          {"digit_sum", to_json(r.digit_sum)},
                          {"palindrome", r.is_palindrome},
                          {"niven", r.niven},
                          {"arh_multipliers", r.additive.complete() ? to_json(r.additive.multipliers) : Json(nullptr)},
                          {"mrh_multipliers",
                           r.multiplicative.complete() ? to_json(r.multiplicative.multipliers) : Json(nullptr)},
                          {"status", complete ? "ok" : "bound_exceeded"},
                          {"detail", detail}});
        all_complete = all_complete && complete;
      }
      return all_complete ? kOk : kFail;
    }

    if (*add_cmd || *mul_cmd) {
      const Natural n = parse_positive(number);
      const bool additive = add_cmd->parsed();
      const auto s = additive ? additive_multipliers(n, base, common.limit)
                              : multiplicative_multipliers(n, base, factor_cap);
      writer.write(Json{{"n", to_json(n)},
                        {"base", base.value()},
                        {"digit_sum", to_json(digit_sum(n, base))},
                        {additive ? "arh_multipliers" : "mrh_multipliers",
                         s.complete() ? to_json(s.multipliers) : Json(nullptr)},
                        {"status", s.complete() ? "ok" : "bound_exceeded"},
                        {"detail", s.detail}});
      return s.complete() ? kOk : kFail;
    }

    if (*eqstar_cmd) {
      const Natural n = parse_positive(number);
      const Natural m = parse_positive(second);
      writer.write(Json{{"n", to_json(n)},
                        {"m", to_json(m)},
                        {"base", base.value()},
                        {"product", to_json(Natural(n * m))},
                        {"palindrome", eqstar_check(n, m, base)}});
      return kOk;
    }

    if (*scan_cmd) {
      const Natural m = parse_positive(number);
      const auto found = multiplicity_scan(m, base, scan_bound);
      writer.write(Json{{"m", to_json(m)},
                        {"base", base.value()},
                        {"bound", scan_bound},
                        {"count", found.size()},
                        {"solutions", to_json(found)}});
      return kOk;
    }

    if (*family_cmd) {
      FamilyInstance inst;
      std::optional<Semantics> only;
      if (family_id == "thm1") {
        inst = thm1_family(base, alpha, ell);
      } else if (family_id == "prop1") {
        inst = prop1_family(base, ell);
      } else if (family_id == "thm33") {
        inst = thm33_family(base, k);
      } else if (family_id == "final-a") {
        inst = final_a(base, digit_a, k);
      } else if (family_id == "final-b") {
        inst = final_b(base, k);
      } else if (family_id == "final-c") {
        inst = final_c(base, k);
        if (!semantics_name.empty()) only = semantics_name == "strict" ? Semantics::strict : Semantics::fixed_width;
      } else if (family_id == "final2") {
        inst = final2(base, k);
      } else if (family_id == "mrh10") {
        inst = mrh10(parse_mrh10_variant(variant), k);
      } else if (family_id == "trivial-mrh") {
        inst = trivial_mrh(base, k);
      } else {
        if (family_n.empty()) throw ValidationError("pal-mult needs -n <palindrome>");
        inst = pal_mult_family(parse_positive(family_n), base, ell, copies);
      }
      if (!semantics_name.empty() && family_id != "final-c") {
        throw ValidationError("--semantics only applies to final-c");
      }
      const auto record = family_record(inst, only);
      writer.write(record);
      return record["status"] == "PASS" ? kOk : kFail;
    }

    if (*palmul_cmd) {
      const auto mode = mode_name == "paper" ? PalMode::paper_phi : PalMode::minimal_order;
      const auto t = palindromic_multiple(parse_positive(number), base, mode);
      writer.write(Json{{"n", t.n},
                        {"base", base.value()},
                        {"mode", to_string(mode)},
                        {"core", t.split.core},
                        {"w", t.split.w},
                        {"beta_max", t.split.m},
                        {"p", to_json(t.p)},
                        {"len_p", t.len_p},
                        {"r", t.r},
                        {"q", t.q},
                        {"palindrome", to_json(t.palindrome)},
                        {"m", to_json(t.m)}});
      return kOk;
    }

    if (*embed_cmd) {
      const auto block = DigitString::parse(number, base);
      const auto e = niven_with_substring(block, embed_variant);
      writer.write(Json{{"block", block.to_string()},
                        {"base", block.base().value()},
                        {"variant", embed_variant},
                        {"k", e.k},
                        {"filler", e.j.digits_text()},
                        {"digits", e.digits.to_string()},
                        {"n", to_json(e.n)}});
      return kOk;
    }

    if (*pattern_cmd) {
      const auto t = parse_pattern(number);
      Bindings bindings;
      for (const auto& b : binds) {
        const auto eq = b.find('=');
        if (eq == std::string::npos || eq == 0) throw ValidationError("--bind expects name=value, got '" + b + "'");
        const auto value = to_u64(parse_natural(b.substr(eq + 1)));
        if (!value) throw ValidationError("--bind value too large in '" + b + "'");
        bindings.counts[b.substr(0, eq)] = *value;
        bindings.digits[b.substr(0, eq)] = *value;
      }
      const auto ds = expand(t, bindings);
      writer.write(Json{{"pattern", t.render()},
                        {"digits", ds.to_string()},
                        {"n", ds.empty() ? Json(nullptr) : to_json(to_natural(ds))}});
      return kOk;
    }

    if (*verify_cmd) {
      const auto report = run_suite(suite);
      const auto fmt = to_format(common.format);
      for (const auto& e : report.entries) {
        for (const auto& c : e.checks) {
          writer.write(Json{{"suite", report.suite},
                            {"family", e.family_id},
                            {"params", e.params},
                            {"check", c.name},
                            {"semantics", to_string(c.semantics)},
                            {"status", to_string(c.status())},
                            {"detail", c.detail}});
        }
      }
      const char* overall = report.failed() == 0 ? "PASS" : "FAIL";
      if (fmt == Format::json) {
        writer.write(Json{{"suite", report.suite},
                          {"status", overall},
                          {"summary",
                           {{"pass", report.passed()}, {"fail", report.failed()}, {"erratum_expected", report.errata()}}}});
      } else {
        writer.write(Json{{"suite", report.suite},
                          {"family", "summary"},
                          {"params", ""},
                          {"check", ""},
                          {"semantics", ""},
                          {"status", overall},
                          {"detail", "pass=" + std::to_string(report.passed()) + " fail=" +
                                         std::to_string(report.failed()) +
                                         " erratum_expected=" + std::to_string(report.errata())}});
      }
      return report.failed() == 0 ? kOk : kFail;
    }
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kFail;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kFail;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    const auto subs = app.get_subcommands();
    if (!subs.empty()) err << subs.front()->help();
    return kUsage;
  }
  return kUsage;
}

}  // namespace rhnum::cli
