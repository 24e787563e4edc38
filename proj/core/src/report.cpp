#include "exm/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace exm {

using ordered_json = nlohmann::ordered_json;

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::unsupported: return "unsupported";
    }
    throw std::logic_error("unreachable verdict");
}

void CheckReport::merge(const CheckReport& other) {
    for (const auto& c : other.cases) {
        CaseRecord copy = c;
        copy.index = static_cast<int>(cases.size());
        copy.name = other.check.empty() ? copy.name : other.check + "/" + copy.name;
        cases.push_back(std::move(copy));
    }
}

int CheckReport::count(Verdict v) const {
    int n = 0;
    for (const auto& c : cases) n += c.verdict == v;
    return n;
}

namespace {

ordered_json exact_json(const std::string& s, const std::string& decimal) {
    return ordered_json{{"provenance", "exact"}, {"value", s}, {"decimal", decimal}};
}

ordered_json field_to_json(const FieldValue& v) {
    if (const auto* s = std::get_if<std::string>(&v)) return *s;
    if (const auto* b = std::get_if<bool>(&v)) return *b;
    if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
    if (const auto* r = std::get_if<Rational>(&v))
        return exact_json(r->to_string(), r->to_decimal_string());
    if (const auto* e = std::get_if<ExtNonneg>(&v))
        return exact_json(e->to_string(), e->is_finite() ? e->value().to_decimal_string() : "inf");
    if (const auto* br = std::get_if<Bracket>(&v)) {
        auto side = [](const ExtNonneg& x) {
            return ordered_json{{"value", x.to_string()},
                                {"decimal", x.is_finite() ? x.value().to_decimal_string() : "inf"}};
        };
        return ordered_json{{"provenance", "bracket"},
                            {"lower", side(br->lower)},
                            {"upper", side(br->upper)},
                            {"width", side(br->width())}};
    }
    if (const auto* d = std::get_if<double>(&v))
        return ordered_json{{"provenance", "float_reference"}, {"value", *d}};
    throw std::logic_error("unreachable field value");
}

std::string field_to_csv(const FieldValue& v) {
    if (const auto* s = std::get_if<std::string>(&v)) return *s;
    if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
    if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
    if (const auto* r = std::get_if<Rational>(&v)) return r->to_string();
    if (const auto* e = std::get_if<ExtNonneg>(&v)) return e->to_string();
    if (const auto* br = std::get_if<Bracket>(&v))
        return br->lower.to_string() + ".." + br->upper.to_string();
    if (const auto* d = std::get_if<double>(&v)) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", *d);
        return buf;
    }
    throw std::logic_error("unreachable field value");
}

}  // namespace

std::string report_to_json(const CheckReport& report, const std::string& command_echo) {
    ordered_json j;
    j["command"] = command_echo;
    j["check"] = report.check;
    j["version"] = kVersion;
    j["seed"] = report.seed;
    j["cases"] = ordered_json::array();
    ExtNonneg max_residual = ExtNonneg::finite(0);
    bool saw_residual = false;
    for (const auto& c : report.cases) {
        ordered_json jc;
        jc["index"] = c.index;
        jc["name"] = c.name;
        jc["verdict"] = verdict_name(c.verdict);
        for (const auto& [k, v] : c.fields) {
            jc[k] = field_to_json(v);
            if (k == "residual") {
                if (const auto* e = std::get_if<ExtNonneg>(&v)) {
                    saw_residual = true;
                    if (*e > max_residual) max_residual = *e;
                }
            }
        }
        j["cases"].push_back(std::move(jc));
    }
    ordered_json summary;
    summary["pass"] = report.pass_count();
    summary["fail"] = report.fail_count();
    summary["unsupported"] = report.unsupported_count();
    if (saw_residual) summary["max_residual"] = max_residual.to_string();
    summary["verdict"] = report.no_failures() ? "pass" : "fail";
    j["summary"] = std::move(summary);
    return j.dump(2) + "\n";
}

std::string report_to_csv(const CheckReport& report) {
    // union of field keys in first-seen order
    std::vector<std::string> keys;
    for (const auto& c : report.cases)
        for (const auto& [k, v] : c.fields) {
            if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
        }
    auto escape = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string out = "\"";
        for (char ch : s) {
            if (ch == '"') out += "\"\"";
            else out += ch;
        }
        return out + "\"";
    };
    std::string out = "index,name,verdict";
    for (const auto& k : keys) out += "," + escape(k);
    out += "\n";
    for (const auto& c : report.cases) {
        out += std::to_string(c.index) + "," + escape(c.name) + "," + verdict_name(c.verdict);
        for (const auto& k : keys) {
            out += ",";
            for (const auto& [fk, fv] : c.fields)
                if (fk == k) {
                    out += escape(field_to_csv(fv));
                    break;
                }
        }
        out += "\n";
    }
    return out;
}

}  // namespace exm
