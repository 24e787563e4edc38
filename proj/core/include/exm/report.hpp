#pragma once

#include "exm/extended.hpp"
#include "exm/rational.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace exm {

inline constexpr const char* kVersion = "0.1.0";

/// Two-sided enclosure [lower, upper] of a quantity that is only known up
/// to convergence diagnostics. Exact quantities use lower == upper.
struct Bracket {
    ExtNonneg lower;
    ExtNonneg upper;

    static Bracket exact(ExtNonneg v) { return {v, v}; }

    bool is_exact() const { return lower == upper; }
    ExtNonneg width() const { return ext_abs_diff(upper, lower); }
    /// Finite midpoint; throws when either end is infinite.
    Rational midpoint() const { return (lower.value() + upper.value()) / Rational(2); }
    bool contains(const ExtNonneg& v) const { return lower <= v && v <= upper; }

    friend bool operator==(const Bracket& a, const Bracket& b) = default;
    std::string to_string() const { return "[" + lower.to_string() + ", " + upper.to_string() + "]"; }
};

enum class Verdict { pass, fail, unsupported };

std::string verdict_name(Verdict v);

/// Detail value with provenance: exact rationals/extended values, bracket
/// enclosures, float references, or plain annotations.
using FieldValue = std::variant<std::string, bool, std::int64_t, Rational, ExtNonneg, Bracket, double>;

struct CaseRecord {
    int index = 0;
    std::string name;
    Verdict verdict = Verdict::pass;
    std::vector<std::pair<std::string, FieldValue>> fields;

    CaseRecord& field(std::string key, FieldValue value) {
        fields.emplace_back(std::move(key), std::move(value));
        return *this;
    }
};

struct CheckReport {
    std::string check;
    std::uint64_t seed = 0;
    std::vector<CaseRecord> cases;

    explicit CheckReport(std::string name = "") : check(std::move(name)) {}

    CaseRecord& add_case(std::string name, Verdict v = Verdict::pass) {
        CaseRecord rec;
        rec.index = static_cast<int>(cases.size());
        rec.name = std::move(name);
        rec.verdict = v;
        cases.push_back(std::move(rec));
        return cases.back();
    }

    void merge(const CheckReport& other);

    int count(Verdict v) const;
    int pass_count() const { return count(Verdict::pass); }
    int fail_count() const { return count(Verdict::fail); }
    int unsupported_count() const { return count(Verdict::unsupported); }
    bool all_pass() const { return fail_count() == 0 && unsupported_count() == 0; }
    bool no_failures() const { return fail_count() == 0; }
};

/// Deterministic serializations. JSON is the canonical form; CSV flattens
/// per-case records (one row per case plus a header). Rationals appear
/// both exactly and as 12-significant-digit decimals; the exact string is
/// authoritative.
std::string report_to_json(const CheckReport& report, const std::string& command_echo);
std::string report_to_csv(const CheckReport& report);

}  // namespace exm
