// Batch experiment runner over the library checks: haar-approx,
// product-check, fubini-check, uniqueness-check, selftest. Reports are
// deterministic JSON (canonical) or CSV; exit codes: 0 all checks pass,
// 1 a check failed, 2 malformed input.

#include "exm/json_io.hpp"
#include "exm/selftest.hpp"
#include "exm/uniqueness.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace exm;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

std::string load_payload(const std::string& arg) {
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("input error: cannot read file '" + arg + "'");
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("input error: cannot write file '" + path + "'");
    out << text;
}

GroupSpec group_from_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return group_from_json(parse_json_text(arg));
    if (arg == "real_add") return GroupSpec::real_add();
    if (arg == "pos_mul") return GroupSpec::pos_mul();
    if (arg == "int_add") return GroupSpec::int_add();
    if (arg == "s3") return GroupSpec::finite(CayleyTable::symmetric3());
    if (arg == "z2" || arg == "z3" || arg == "z4" || arg == "z5" || arg == "z6") {
        return GroupSpec::finite(CayleyTable::cyclic(arg[1] - '0'));
    }
    throw std::invalid_argument("input error: unknown group '" + arg + "'");
}

SetValue set_from_arg(const std::string& arg, const GroupSpec& G) {
    if (!arg.empty() && arg.front() == '{' && arg.find(':') != std::string::npos)
        return set_from_json(parse_json_text(load_payload(arg)), G);
    if (G.is_continuous()) return parse_interval_text(arg);
    return set_from_json(parse_json_text(load_payload(arg)), G);
}

EpsSchedule schedule_from_arg(const std::string& arg) {
    if (arg.rfind("dyadic:", 0) != 0)
        throw std::invalid_argument("input error: unknown eps schedule '" + arg +
                                    "' (expected dyadic:<k>)");
    return EpsSchedule::dyadic(std::stoi(arg.substr(7)));
}

std::string format_report(const CheckReport& report, const std::string& echo,
                          const std::string& format) {
    if (format == "csv") return report_to_csv(report);
    return report_to_json(report, echo);
}

struct CommonOpts {
    std::string out = "-";
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--out", opts.out, "output path ('-' for stdout)");
    cmd->add_option("--format", opts.format, "report format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
}

// ---- haar-approx ------------------------------------------------------

int run_haar_approx(const std::string& group_arg, const std::string& k0_arg,
                    const std::string& target_arg, int n_max, const std::string& sched_arg,
                    const CommonOpts& opts) {
    GroupSpec G = group_from_arg(group_arg);
    PositiveCompact K0(G, set_from_arg(k0_arg, G));
    SetValue target = set_from_arg(target_arg, G);
    EpsSchedule sched = schedule_from_arg(sched_arg);

    HaarEstimateResult est = haar_measure_estimate(G, K0, target, n_max, sched);

    std::string echo = "haar-approx --group " + group_type_name(G.type()) + " --k0 " +
                       sv_to_string(K0.set) + " --target " + sv_to_string(target) + " --n-max " +
                       std::to_string(n_max) + " --eps " + sched.name();

    if (opts.format == "csv") {
        CheckReport rep("haar_approx");
        for (std::size_t i = 0; i < est.prehaar_by_n.size(); ++i) {
            auto& rec = rep.add_case("n=" + std::to_string(i + 1));
            rec.field("prehaar", est.prehaar_by_n[i]);
        }
        auto& rec = rep.add_case("bracket");
        rec.field("bracket", est.bracket);
        rec.field("cauchy_gap", est.cauchy_gap);
        write_output(opts.out, report_to_csv(rep));
        return kExitPass;
    }

    nlohmann::ordered_json j;
    j["command"] = echo;
    j["version"] = kVersion;
    j["values"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < est.prehaar_by_n.size(); ++i) {
        nlohmann::ordered_json v;
        v["n"] = i + 1;
        v["prehaar"] = est.prehaar_by_n[i].to_string();
        v["decimal"] = est.prehaar_by_n[i].to_decimal_string();
        j["values"].push_back(std::move(v));
    }
    j["cauchy_gap"] = est.cauchy_gap.to_string();
    j["bracket"] = {est.bracket.lower.to_string(), est.bracket.upper.to_string()};
    j["bracket_decimal"] = {
        est.bracket.lower.is_finite() ? est.bracket.lower.value().to_decimal_string() : "inf",
        est.bracket.upper.is_finite() ? est.bracket.upper.value().to_decimal_string() : "inf"};
    switch (G.type()) {
        case GroupType::real_add: {
            j["reference"] = iset_length(std::get<IntervalSet>(target)).to_string();
            break;
        }
        case GroupType::pos_mul: {
            // float reference: log-length ratio, tagged as such
            const auto& t = std::get<IntervalSet>(target);
            const auto& k = std::get<IntervalSet>(K0.set);
            double num = 0, den = 0;
            for (const auto& [lo, hi] : t.intervals())
                num += std::log(hi.to_double()) - std::log(lo.to_double());
            for (const auto& [lo, hi] : k.intervals())
                den += std::log(hi.to_double()) - std::log(lo.to_double());
            j["reference_float"] = num / den;
            break;
        }
        default: {
            ExtNonneg size = measure_eval(MeasureSpec::counting(G), target);
            ExtNonneg base = measure_eval(MeasureSpec::counting(G), K0.set);
            j["reference"] = (size / base).to_string();
            break;
        }
    }
    write_output(opts.out, j.dump(2) + "\n");
    return kExitPass;
}

// ---- product-check / fubini-check --------------------------------------

int run_product_check(const std::string& group_arg, const std::string& mu_arg,
                      const std::string& nu_arg, const std::string& a_arg,
                      const std::string& f_arg, const CommonOpts& opts) {
    GroupSpec G = group_from_arg(group_arg);
    MeasureSpec mu = measure_from_json(parse_json_text(load_payload(mu_arg)), G);
    MeasureSpec nu = measure_from_json(parse_json_text(load_payload(nu_arg)), G);

    CheckReport merged("product_check");
    if (!a_arg.empty()) {
        ProductSet A = product_set_from_json(parse_json_text(load_payload(a_arg)), G);
        merged.merge(symmetric_formula_check(mu, nu, A));
    }
    if (!f_arg.empty()) {
        SimpleFunc2D f = simple_func2d_from_json(parse_json_text(load_payload(f_arg)), G);
        merged.merge(tonelli_check(mu, nu, f));
    }
    if (a_arg.empty() && f_arg.empty())
        throw std::invalid_argument("input error: product-check needs --a and/or --f");

    std::string echo = "product-check --group " + group_type_name(G.type()) + " --mu " +
                       measure_to_json(mu).dump() + " --nu " + measure_to_json(nu).dump();
    write_output(opts.out, format_report(merged, echo, opts.format));
    return merged.no_failures() ? kExitPass : kExitCheckFailed;
}

int run_fubini_check(const std::string& group_arg, const std::string& mu_arg,
                     const std::string& nu_arg, const std::string& f_arg, const CommonOpts& opts) {
    GroupSpec G = group_from_arg(group_arg);
    MeasureSpec mu = measure_from_json(parse_json_text(load_payload(mu_arg)), G);
    MeasureSpec nu = measure_from_json(parse_json_text(load_payload(nu_arg)), G);
    StepFuncVec2D f = step_func2d_from_json(parse_json_text(load_payload(f_arg)), G);

    CheckReport merged("fubini_check");
    merged.merge(fubini_integrability_check(mu, nu, f));
    FubiniPart1 p1 = fubini_part1(mu, nu, f);
    if (p1.integrable_product) {
        merged.merge(fubini_check(mu, nu, f));
    } else {
        auto& rec = merged.add_case("fubini/skipped");
        rec.field("reason", std::string("f is not integrable; Part 2 does not apply"));
    }

    std::string echo = "fubini-check --group " + group_type_name(G.type()) + " --mu " +
                       measure_to_json(mu).dump() + " --nu " + measure_to_json(nu).dump();
    write_output(opts.out, format_report(merged, echo, opts.format));
    return merged.no_failures() ? kExitPass : kExitCheckFailed;
}

// ---- uniqueness-check ---------------------------------------------------

int run_uniqueness_check(const std::string& group_arg, const std::string& nu_arg,
                         const std::string& k0_arg, const std::string& sets_arg, int n_max,
                         const std::string& sched_arg, const std::string& tol_arg,
                         const CommonOpts& opts) {
    GroupSpec G = group_from_arg(group_arg);
    MeasureSpec nu = measure_from_json(parse_json_text(load_payload(nu_arg)), G);
    PositiveCompact K0(G, set_from_arg(k0_arg, G));
    json sets_json = parse_json_text(load_payload(sets_arg));
    if (sets_json.is_object() && sets_json.contains("sets")) sets_json = sets_json["sets"];
    if (!sets_json.is_array())
        throw std::invalid_argument("input error: --sets expects an array of sets");
    std::vector<SetValue> sets;
    for (const auto& js : sets_json) sets.push_back(set_from_json(js, G));

    CheckReport rep = uniqueness_check(G, nu, K0, sets, n_max, schedule_from_arg(sched_arg),
                                       Rational::parse(tol_arg));
    std::string echo = "uniqueness-check --group " + group_type_name(G.type()) + " --nu " +
                       measure_to_json(nu).dump() + " --k0 " + sv_to_string(K0.set) +
                       " --n-max " + std::to_string(n_max);
    write_output(opts.out, format_report(rep, echo, opts.format));
    return rep.no_failures() ? kExitPass : kExitCheckFailed;
}

// ---- selftest -----------------------------------------------------------

int run_selftest(std::uint64_t seed, int threads, const CommonOpts& opts) {
    CheckReport rep = selftest(seed, threads);
    std::string echo = "selftest --seed " + std::to_string(seed);
    write_output(opts.out, format_report(rep, echo, opts.format));
    return rep.no_failures() ? kExitPass : kExitCheckFailed;
}

int dispatch(int argc, char** argv);

// `run --config cfg.json`: a single JSON document mirroring the flags.
int run_config(const std::string& path) {
    json cfg = parse_json_text(load_payload(path));
    if (!cfg.is_object() || !cfg.contains("command"))
        throw std::invalid_argument("input error: config must be an object with a 'command' field");
    std::vector<std::string> args;
    args.push_back("exm");
    args.push_back(cfg["command"].get<std::string>());
    for (const auto& [key, value] : cfg.items()) {
        if (key == "command") continue;
        args.push_back("--" + key);
        if (value.is_string()) args.push_back(value.get<std::string>());
        else args.push_back(value.dump());
    }
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    return dispatch(static_cast<int>(argv.size()), argv.data());
}

int dispatch(int argc, char** argv) {
    CLI::App app{"exact measure-theory checks: covering-number Haar estimates, product "
                 "measures, and uniqueness diagnostics on exactly-representable groups"};
    app.require_subcommand(1);

    // haar-approx
    auto* haar_cmd = app.add_subcommand("haar-approx", "prehaar sequence and normalized estimate");
    std::string ha_group = "real_add", ha_k0, ha_target, ha_sched = "dyadic:10";
    int ha_n = 10;
    CommonOpts ha_opts;
    haar_cmd->add_option("--group", ha_group, "group: real_add|pos_mul|int_add|s3|z2..z6|{json}");
    haar_cmd->add_option("--k0", ha_k0, "reference compact, e.g. \"[0,1]\"")->required();
    haar_cmd->add_option("--target", ha_target, "target set, e.g. \"[0,3)\"")->required();
    haar_cmd->add_option("--n-max", ha_n, "shrinking-basis resolution");
    haar_cmd->add_option("--eps", ha_sched, "epsilon schedule preset (dyadic:<k>)");
    add_common(haar_cmd, ha_opts);

    // product-check
    auto* prod_cmd = app.add_subcommand("product-check", "rectangle/transpose and Tonelli checks");
    std::string pc_group = "real_add", pc_mu, pc_nu, pc_a, pc_f;
    CommonOpts pc_opts;
    prod_cmd->add_option("--group", pc_group, "carrier group");
    prod_cmd->add_option("--mu", pc_mu, "measure JSON or file")->required();
    prod_cmd->add_option("--nu", pc_nu, "measure JSON or file")->required();
    prod_cmd->add_option("--a", pc_a, "product set JSON or file");
    prod_cmd->add_option("--f", pc_f, "2-D simple function JSON or file");
    add_common(prod_cmd, pc_opts);

    // fubini-check
    auto* fub_cmd = app.add_subcommand("fubini-check", "Fubini Part 1 and Part 2 checks");
    std::string fc_group = "real_add", fc_mu, fc_nu, fc_f;
    CommonOpts fc_opts;
    fub_cmd->add_option("--group", fc_group, "carrier group");
    fub_cmd->add_option("--mu", fc_mu, "measure JSON or file")->required();
    fub_cmd->add_option("--nu", fc_nu, "measure JSON or file")->required();
    fub_cmd->add_option("--f", fc_f, "2-D step function JSON or file")->required();
    add_common(fub_cmd, fc_opts);

    // uniqueness-check
    auto* uni_cmd = app.add_subcommand("uniqueness-check", "nu = nu(K0) * haar estimate");
    std::string uc_group = "real_add", uc_nu, uc_k0, uc_sets, uc_sched = "dyadic:10", uc_tol = "0";
    int uc_n = 10;
    CommonOpts uc_opts;
    uni_cmd->add_option("--group", uc_group, "carrier group");
    uni_cmd->add_option("--nu", uc_nu, "measure JSON or file")->required();
    uni_cmd->add_option("--k0", uc_k0, "reference compact")->required();
    uni_cmd->add_option("--sets", uc_sets, "JSON array of test sets (or {\"sets\":[...]})")->required();
    uni_cmd->add_option("--n-max", uc_n, "shrinking-basis resolution");
    uni_cmd->add_option("--eps", uc_sched, "epsilon schedule preset");
    uni_cmd->add_option("--tolerance", uc_tol, "extra residual allowance (rational)");
    add_common(uni_cmd, uc_opts);

    // selftest
    auto* self_cmd = app.add_subcommand("selftest", "run every module's property suite");
    std::uint64_t st_seed = 42;
    int st_threads = 1;
    CommonOpts st_opts;
    self_cmd->add_option("--seed", st_seed, "RNG seed");
    self_cmd->add_option("--threads", st_threads, "worker threads (report is identical)");
    add_common(self_cmd, st_opts);

    // run --config
    auto* run_cmd = app.add_subcommand("run", "run a command from a JSON config document");
    std::string cfg_path;
    run_cmd->add_option("--config", cfg_path, "JSON config mirroring the flags")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInputError;
    }

    if (haar_cmd->parsed())
        return run_haar_approx(ha_group, ha_k0, ha_target, ha_n, ha_sched, ha_opts);
    if (prod_cmd->parsed()) return run_product_check(pc_group, pc_mu, pc_nu, pc_a, pc_f, pc_opts);
    if (fub_cmd->parsed()) return run_fubini_check(fc_group, fc_mu, fc_nu, fc_f, fc_opts);
    if (uni_cmd->parsed())
        return run_uniqueness_check(uc_group, uc_nu, uc_k0, uc_sets, uc_n, uc_sched, uc_tol, uc_opts);
    if (self_cmd->parsed()) return run_selftest(st_seed, st_threads, st_opts);
    if (run_cmd->parsed()) return run_config(cfg_path);
    return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
