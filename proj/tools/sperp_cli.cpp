// sperp: command-line front end for the plethysm engine.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sperp/app/bench.hpp"
#include "sperp/app/disk_cache.hpp"
#include "sperp/app/expr.hpp"
#include "sperp/app/format.hpp"
#include "sperp/app/verify.hpp"
#include "sperp/closed_forms.hpp"
#include "sperp/plethysm.hpp"
#include "sperp/tableaux.hpp"

namespace {

using namespace sperp;
using namespace sperp::app;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Common {
    std::string method = "auto";
    std::string basis = "s";
    std::string format = "text";
    std::string mode = "row";
};

Method parse_method(const std::string& s) {
    if (auto m = method_from_name(s)) return *m;
    throw CLI::ValidationError("--method", "unknown method '" + s + "'");
}

Basis parse_basis(const std::string& s) {
    if (s.size() == 1) {
        if (auto b = basis_from_letter(s[0])) return *b;
    }
    throw CLI::ValidationError("--basis", "unknown basis '" + s + "'");
}

PerpMode parse_mode(const std::string& s) {
    if (s == "row") return PerpMode::row;
    if (s == "column" || s == "col") return PerpMode::column;
    throw CLI::ValidationError("--mode", "unknown mode '" + s + "'");
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void emit(const SymFunc& f, const std::string& input, const Common& c, double millis) {
    if (c.format == "json") {
        std::cout << to_json(f, input, c.method, millis).dump() << '\n';
    } else if (c.format == "csv") {
        std::cout << "partition,coeff\n";
        for (const auto& [p, coeff] : f.terms()) std::cout << csv_field(p.str()) << ',' << coeff.str() << '\n';
    } else {
        std::cout << to_text(f) << '\n';
    }
}

int cmd_expand(const std::vector<std::string>& args, bool from_perp, const Common& c) {
    const auto start = std::chrono::steady_clock::now();
    PlethysmEngine engine;
    SymFunc result;
    std::string input;
    if (from_perp) {
        PerpSequence a{parse_mode(c.mode), {}};
        for (const auto& arg : args) {
            a.entries.push_back(to_basis(parse_expr(arg, engine, parse_method(c.method)), Basis::schur));
            input += (input.empty() ? "" : "; ") + arg;
        }
        result = expand_schur(a, {.expect_nonnegative = false, .verify = true});
    } else {
        if (args.size() != 1) throw CLI::ValidationError("expand", "expects exactly one expression (or --perp A1 A2 ...)");
        input = args.front();
        result = parse_expr(input, engine, parse_method(c.method));
    }
    emit(to_basis(result, parse_basis(c.basis)), input, c, elapsed_ms(start));
    return kExitOk;
}

int cmd_plethysm(const std::string& f_text, const std::string& g_text, const Common& c) {
    const auto start = std::chrono::steady_clock::now();
    const Method method = parse_method(c.method);
    const SymFunc f = parse_expr(f_text);
    const SymFunc g = parse_expr(g_text);
    const std::string input = "(" + to_text(f) + ")[" + to_text(g) + "]";
    const DiskCache cache = DiskCache::from_environment();
    SymFunc result;
    if (auto hit = cache.load(input)) {
        result = *std::move(hit);
    } else {
        PlethysmEngine engine;
        result = engine.plethysm(f, g, method);
        cache.store(input, result);
    }
    emit(to_basis(result, parse_basis(c.basis)), input, c, elapsed_ms(start));
    return kExitOk;
}

int cmd_perp(const std::string& f_text, const std::string& of_text, const Common& c) {
    const auto start = std::chrono::steady_clock::now();
    PlethysmEngine engine;
    const SymFunc f = parse_expr(f_text, engine, parse_method(c.method));
    if (!of_text.empty()) {
        const SymFunc g = parse_expr(of_text, engine, parse_method(c.method));
        emit(to_basis(f_perp(f, to_basis(g, Basis::schur)), parse_basis(c.basis)), f_text + " perp " + of_text, c,
             elapsed_ms(start));
        return kExitOk;
    }
    const PerpSequence a = perp_sequence(f, parse_mode(c.mode));
    const double millis = elapsed_ms(start);
    const Basis basis = parse_basis(c.basis);
    if (c.format == "json") {
        nlohmann::json entries = nlohmann::json::array();
        for (int r = 1; r <= a.degree(); ++r) {
            auto j = to_json(to_basis(a.at(r), basis), f_text, c.method, millis);
            entries.push_back({{"r", r}, {"terms", j["terms"]}});
        }
        std::cout << nlohmann::json{{"input", f_text}, {"mode", c.mode}, {"basis", c.basis}, {"entries", entries},
                                    {"millis", millis}}
                         .dump()
                  << '\n';
    } else if (c.format == "csv") {
        std::cout << "r,value\n";
        for (int r = 1; r <= a.degree(); ++r) std::cout << r << ',' << csv_field(to_text(to_basis(a.at(r), basis))) << '\n';
    } else {
        for (int r = 1; r <= a.degree(); ++r) std::cout << "A[" << r << "] = " << to_text(to_basis(a.at(r), basis)) << '\n';
    }
    return kExitOk;
}

int cmd_monomials(const std::string& f_text, int n, const Common& c) {
    const auto start = std::chrono::steady_clock::now();
    PlethysmEngine engine;
    const SymFunc f = parse_expr(f_text, engine, parse_method(c.method));
    const Monomials m = monomial_expansion_sperp(f, n);
    if (c.format == "json") {
        std::cout << nlohmann::json{{"input", f_text}, {"variables", n}, {"terms", to_json(m)}, {"millis", elapsed_ms(start)}}
                         .dump()
                  << '\n';
    } else if (c.format == "csv") {
        std::cout << "exponents,coeff\n";
        for (auto it = m.rbegin(); it != m.rend(); ++it) {
            std::string e;
            for (int x : it->first) e += (e.empty() ? "" : " ") + std::to_string(x);
            std::cout << e << ',' << it->second.str() << '\n';
        }
    } else {
        std::cout << to_text(m) << '\n';
    }
    return kExitOk;
}

int cmd_tableaux(const std::string& type, int k, const Common& c) {
    std::vector<TypeLabel> types;
    for (TypeLabel t : kAllTypes) {
        if (type == "all" || type == type_name(t)) types.push_back(t);
    }
    if (types.empty()) throw CLI::ValidationError("--type", "unknown type '" + type + "' (123, 12/3, 13/2, 1/2/3, all)");
    nlohmann::json out = nlohmann::json::array();
    if (c.format == "csv") std::cout << "type,shape,count\n";
    for (TypeLabel t : types) {
        const auto counts = tab_shape_counts(t, k);
        if (c.format == "json") {
            nlohmann::json shapes = nlohmann::json::array();
            for (const auto& [shape, n] : counts) shapes.push_back({{"partition", shape.parts()}, {"count", n}});
            out.push_back({{"type", type_name(t)}, {"k", k}, {"shapes", shapes}});
        } else if (c.format == "csv") {
            for (const auto& [shape, n] : counts) std::cout << type_name(t) << ',' << csv_field(shape.str()) << ',' << n << '\n';
        } else {
            std::cout << "Tab[" << type_name(t) << ", k=" << k << "]:";
            int total = 0;
            for (const auto& [shape, n] : counts) {
                std::cout << ' ' << shape.str() << 'x' << n;
                total += n;
            }
            std::cout << "  (" << total << " tableaux)\n";
        }
    }
    if (c.format == "json") std::cout << out.dump() << '\n';
    return kExitOk;
}

int cmd_verify(const std::string& suite, const VerifyOptions& options, const Common& c) {
    const auto& suites = verify_suites();
    if (suite != "all" && std::find(suites.begin(), suites.end(), suite) == suites.end())
        throw CLI::ValidationError("verify", "unknown suite '" + suite + "'");
    std::vector<std::string> run = suite == "all" ? suites : std::vector<std::string>{suite};
    bool all_passed = true;
    nlohmann::json out = nlohmann::json::array();
    for (const auto& name : run) {
        const VerifyResult r = run_verify(name, options);
        all_passed = all_passed && r.passed;
        if (c.format == "json") {
            out.push_back({{"suite", r.suite},
                           {"passed", r.passed},
                           {"cases", r.cases},
                           {"counterexample", r.counterexample},
                           {"millis", r.millis}});
        } else {
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.cases << " cases in "
                      << static_cast<long>(r.millis) << " ms\n";
            if (!r.passed) std::cout << "  first counterexample: " << r.counterexample << '\n';
        }
    }
    if (c.format == "json") std::cout << out.dump() << '\n';
    return all_passed ? kExitOk : kExitFailed;
}

int cmd_bench(std::vector<std::string> cases, const std::string& methods_csv, int repetitions, const Common& c) {
    if (cases.empty()) cases = default_bench_cases();
    std::vector<Method> methods;
    std::stringstream ss(methods_csv);
    for (std::string item; std::getline(ss, item, ',');) methods.push_back(parse_method(item));
    std::vector<BenchRow> rows;
    for (const auto& expr : cases) {
        auto r = run_bench(expr, methods, repetitions);
        rows.insert(rows.end(), r.begin(), r.end());
    }
    if (c.format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : rows)
            out.push_back({{"case", r.case_expr}, {"method", r.method}, {"millis", r.millis},
                           {"min_millis", r.min_millis}, {"terms", r.terms}, {"checksum", r.checksum}});
        std::cout << out.dump() << '\n';
    } else if (c.format == "csv") {
        std::cout << "case,method,millis,terms,checksum\n";
        for (const auto& r : rows)
            std::cout << csv_field(r.case_expr) << ',' << r.method << ',' << r.millis << ',' << r.terms << ','
                      << r.checksum << '\n';
    } else {
        for (const auto& r : rows)
            std::cout << r.case_expr << "  " << r.method << "  median " << r.millis << " ms  min " << r.min_millis
                      << " ms  " << r.terms << " terms  " << r.checksum << '\n';
    }
    if (!checksums_agree(rows)) {
        std::cerr << "error: methods disagree on at least one case\n";
        return kExitFailed;
    }
    return kExitOk;
}

void add_common(CLI::App* sub, Common& c, bool with_mode) {
    sub->add_option("--method", c.method, "auto | sperp | powersum | closed")->capture_default_str();
    sub->add_option("--basis", c.basis, "output basis: s | m | h | e | p")->capture_default_str();
    sub->add_option("--format", c.format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
    if (with_mode) sub->add_option("--mode", c.mode, "row | column")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact plethysm of Schur functions by the s-perp method"};
    app.require_subcommand(1);
    Common common;

    std::vector<std::string> expand_args;
    bool from_perp = false;
    auto* expand = app.add_subcommand("expand", "Evaluate an expression, e.g. 's[2][s[2]]' or 'h[2]*e[1]'");
    expand->add_option("expr", expand_args, "expression (with --perp: the entries A[1] A[2] ...)")->required();
    expand->add_flag("--perp", from_perp, "rebuild f from its perp sequence");
    add_common(expand, common, true);

    std::string f_text, g_text;
    auto* pleth = app.add_subcommand("plethysm", "Compute f[g]; results are memoized under $SPERP_CACHE_DIR");
    pleth->add_option("f", f_text, "outer function")->required();
    pleth->add_option("g", g_text, "inner function")->required();
    add_common(pleth, common, false);

    std::string perp_f, perp_of;
    auto* perp = app.add_subcommand("perp", "Print the perp sequence of f, or f^perp applied to --of");
    perp->add_option("f", perp_f, "expression")->required();
    perp->add_option("--of", perp_of, "apply f^perp to this expression");
    add_common(perp, common, true);

    std::string mono_f;
    int variables = 2;
    auto* mono = app.add_subcommand("monomials", "Monomial expansion in n variables");
    mono->add_option("f", mono_f, "expression")->required();
    mono->add_option("-n,--variables", variables, "number of variables")->check(CLI::NonNegativeNumber)->capture_default_str();
    add_common(mono, common, false);

    std::string type = "all";
    int k = 2;
    auto* tab = app.add_subcommand("tableaux", "Shape counts of the typed tableaux of weight (k,k,k)");
    tab->add_option("--type", type, "123 | 12/3 | 13/2 | 1/2/3 | all")->capture_default_str();
    tab->add_option("-k", k, "weight")->check(CLI::PositiveNumber)->capture_default_str();
    add_common(tab, common, false);

    std::string suite = "all";
    VerifyOptions verify_options;
    int max_product = 0, max_k = 0, max_h = 0;
    auto* verify = app.add_subcommand("verify", "Check identities against the power-sum oracle");
    verify->add_option("suite", suite, "oracle | deg3 | rowcol | hooks | lemmas | all")->capture_default_str();
    verify->add_option("--max-product", max_product, "oracle: bound on |lambda|*|mu| (default 12)");
    verify->add_option("--max-k", max_k, "deg3: bound on k (default 5); lemmas: two-row recurrence up to k (default 8)");
    verify->add_option("--max-h", max_h, "rowcol (default 8) and hooks (default 7): bound on h");
    verify->add_option("--seed", verify_options.seed, "seed for randomized families")->capture_default_str();
    add_common(verify, common, false);

    std::vector<std::string> bench_cases;
    std::string bench_methods = "sperp,powersum";
    int repetitions = 5;
    auto* bench = app.add_subcommand("bench", "Time methods against each other on the same expressions");
    bench->add_option("cases", bench_cases, "expressions (default: a built-in list)");
    bench->add_option("--methods", bench_methods, "comma-separated methods")->capture_default_str();
    bench->add_option("--repetitions", repetitions, "timed runs per method")->check(CLI::PositiveNumber)->capture_default_str();
    add_common(bench, common, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*expand) return cmd_expand(expand_args, from_perp, common);
        if (*pleth) return cmd_plethysm(f_text, g_text, common);
        if (*perp) return cmd_perp(perp_f, perp_of, common);
        if (*mono) return cmd_monomials(mono_f, variables, common);
        if (*tab) return cmd_tableaux(type, k, common);
        if (*verify) {
            if (max_product > 0) verify_options.max_product = max_product;
            if (max_k > 0) verify_options.max_k = max_k;
            if (max_h > 0) verify_options.max_h = max_h;
            return cmd_verify(suite, verify_options, common);
        }
        if (*bench) return cmd_bench(bench_cases, bench_methods, repetitions, common);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnsupportedMethod& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InconsistentPerpSequence& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailed;
    }
    return kExitUsage;
}
