#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "sperp/app/bench.hpp"
#include "sperp/app/disk_cache.hpp"
#include "sperp/app/expr.hpp"
#include "sperp/app/format.hpp"
#include "sperp/app/verify.hpp"
#include "sperp/closed_forms.hpp"

using namespace sperp;
using namespace sperp::app;

namespace {

SymFunc s(Partition p, Rational c = 1) { return SymFunc::schur(std::move(p), std::move(c)); }

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SPERP_CLI_PATH) + " " + args + " 2>&1";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string trim(std::string text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == ' ')) text.pop_back();
    return text;
}

}  // namespace

TEST_CASE("parse_expr sums and coefficients") {
    CHECK(parse_expr("s[2]+s[1,1]") == s({2}) + s({1, 1}));
    CHECK(parse_expr(" 3/2 * s[ 2 ] - s[1,1] ") == s({2}, Rational(3, 2)) - s({1, 1}));
    CHECK(parse_expr("-s[1]") == s({1}, -1));
    CHECK(parse_expr("s[]") == SymFunc::one());
    CHECK(parse_expr("2") == s({}, 2));
    CHECK(parse_expr("h[2]*e[1]") == SymFunc::term(Basis::homogeneous, {2}) * SymFunc::term(Basis::elementary, {1}));
    CHECK(parse_expr("p[2]").basis() == Basis::powersum);
    CHECK(parse_expr("m[1] + s[1]").basis() == Basis::monomial);
    CHECK(parse_expr("(s[1]+s[2])*2") == s({1}, 2) + s({2}, 2));
    CHECK(parse_expr("s[2,1,0]") == s({2, 1}));
}

TEST_CASE("parse_expr plethysm application") {
    PlethysmEngine engine;
    CHECK(parse_expr("s[2][s[2]]", engine) == s({4}) + s({2, 2}));
    CHECK(parse_expr("s[2][s[2]]", engine, Method::powersum_oracle) == s({4}) + s({2, 2}));
    CHECK(parse_expr("s[1,1][s[1,1]][s[1]]", engine) == s({2, 1, 1}));
    CHECK(parse_expr("(s[2]+s[1,1])[s[1,1]]", engine) == plethysm_powersum(s({2}) + s({1, 1}), s({1, 1})));
    CHECK(parse_expr("p[2][p[3]]", engine) == to_basis(SymFunc::term(Basis::powersum, {6}), Basis::schur));
    CHECK_THROWS_AS(parse_expr("s[2][s[2]]"), ParseError);
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_expr("s[1,2]");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("not a partition") != std::string::npos);
        CHECK(e.position() == 1);
    }
    try {
        parse_expr("s[2] + x[1]");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 7);
    }
    CHECK_THROWS_AS(parse_expr("1/0*s[1]"), ParseError);
    CHECK_THROWS_AS(parse_expr("s[2"), ParseError);
    CHECK_THROWS_AS(parse_expr("s[2]]"), ParseError);
    CHECK_THROWS_AS(parse_expr(""), ParseError);
    CHECK_THROWS_AS(parse_expr("s[2] +"), ParseError);
    CHECK_THROWS_AS(parse_expr("s[-1]"), ParseError);
}

TEST_CASE("canonical text") {
    CHECK(to_text(s({4}) + s({2, 2})) == "s[4] + s[2,2]");
    CHECK(to_text(s({2}, 3) - s({1, 1}, Rational(1, 2))) == "3*s[2] - 1/2*s[1,1]");
    CHECK(to_text(s({1}, -1)) == "-s[1]");
    CHECK(to_text(SymFunc()) == "0");
    CHECK(to_text(s({}, -2)) == "-2*s[]");
    CHECK(to_text(SymFunc::term(Basis::powersum, {2, 1})) == "p[2,1]");
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        const SymFunc f = random_homogeneous(rng, 1 + trial % 7, 6, 5);
        CHECK(parse_expr(to_text(f)) == f);
    }
}

TEST_CASE("JSON round trip") {
    const SymFunc f = s({3, 1}, Rational(-7, 3)) + s({2, 2});
    const auto j = to_json(f, "input", "sperp", 1.5);
    CHECK(j.at("input") == "input");
    CHECK(j.at("method") == "sperp");
    CHECK(j.at("basis") == "s");
    CHECK(j.at("terms").size() == 2);
    CHECK(j.at("terms")[0].at("partition") == nlohmann::json::array({3, 1}));
    CHECK(j.at("terms")[0].at("coeff") == "-7/3");
    CHECK(from_json(nlohmann::json::parse(j.dump())) == f);
    const SymFunc m = SymFunc::term(Basis::monomial, {1, 1}, 4);
    CHECK(from_json(to_json(m, "", "", 0)) == m);
}

TEST_CASE("checksums and monomial text") {
    CHECK(checksum(s({4}) + s({2, 2})) == checksum(parse_expr("s[2,2]+s[4]")));
    CHECK(checksum(s({4})) != checksum(s({2, 2})));
    CHECK(checksum(SymFunc()).size() == 16);
    const Monomials m{{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}};
    CHECK(to_text(m) == "x1^2 + x1*x2 + x2^2");
    CHECK(to_text(Monomials{}) == "0");
    CHECK(to_text(Monomials{{{1, 2}, 2}}) == "2*x1*x2^2");
    CHECK(to_json(m).size() == 3);
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("ab") == "ab");
}

TEST_CASE("disk cache") {
    const auto root = std::filesystem::temp_directory_path() / "sperp_test_cache";
    std::filesystem::remove_all(root);
    const DiskCache cache(root);
    CHECK(cache.enabled());
    CHECK_FALSE(cache.load("s[2][s[2]]").has_value());
    cache.store("s[2][s[2]]", s({4}) + s({2, 2}));
    CHECK(cache.load("s[2][s[2]]") == s({4}) + s({2, 2}));
    CHECK_FALSE(cache.load("s[3][s[2]]").has_value());
    CHECK_FALSE(DiskCache("").enabled());
    std::filesystem::remove_all(root);
}

TEST_CASE("verify suites at small bounds") {
    VerifyOptions options;
    options.max_product = 6;
    options.max_k = 5;
    options.max_h = 4;
    for (const auto& suite : verify_suites()) {
        const VerifyResult r = run_verify(suite, options);
        CAPTURE(suite);
        CAPTURE(r.counterexample);
        CHECK(r.passed);
        CHECK(r.cases > 0);
    }
    CHECK_THROWS_AS(run_verify("nonsense"), std::invalid_argument);
}

TEST_CASE("bench rows agree") {
    const std::vector<Method> methods{Method::sperp_recursive, Method::powersum_oracle};
    const auto rows = run_bench("s[2][s[2]]", methods, 2);
    REQUIRE(rows.size() == 2);
    CHECK(checksums_agree(rows));
    CHECK(rows[0].terms == 2);
    CHECK(rows[0].min_millis <= rows[0].millis);
    CHECK_THROWS_AS(run_bench("s[2][s[2]]", methods, 0), std::invalid_argument);
    std::vector<BenchRow> bad = rows;
    bad[1].checksum = "0";
    CHECK_FALSE(checksums_agree(bad));
}

TEST_CASE("command line: expand and plethysm") {
    auto r = run_cli("expand 's[2][s[2]]'");
    CHECK(r.code == 0);
    CHECK(trim(r.out) == "s[4] + s[2,2]");
    r = run_cli("plethysm 's[3,1]' 's[1,1]' --method closed");
    CHECK(r.code == 0);
    CHECK(parse_expr(trim(r.out)) == closed_form({3, 1}, {1, 1}));
    r = run_cli("expand 's[2]' --basis m");
    CHECK(trim(r.out) == "m[2] + m[1,1]");
    r = run_cli("expand 's[3,1][s[1,1]]' --format json");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(from_json(j) == plethysm_powersum(s({3, 1}), s({1, 1})));
    CHECK(j.at("input") == "s[3,1][s[1,1]]");
    r = run_cli("expand --perp 's[2,1]+s[3]' '2*s[2]' 's[1]' 's[]'");
    CHECK(r.code == 0);
    CHECK(trim(r.out) == "s[4] + s[2,2]");
}

TEST_CASE("command line: other subcommands") {
    auto r = run_cli("perp 's[2,2]+s[4]'");
    CHECK(r.code == 0);
    CHECK(r.out.find("2*s[2]") != std::string::npos);
    r = run_cli("perp 's[1]' --of 's[3,1]'");
    CHECK(trim(r.out) == "s[3] + s[2,1]");
    r = run_cli("monomials 's[2]' -n 2");
    CHECK(trim(r.out) == "x1^2 + x1*x2 + x2^2");
    r = run_cli("tableaux --type 123 -k 2");
    CHECK(r.code == 0);
    r = run_cli("verify rowcol --max-h 4");
    CHECK(r.code == 0);
    r = run_cli("bench 's[2][s[2]]' --methods sperp,powersum --repetitions 1 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("case,method,millis,terms,checksum", 0) == 0);
}

TEST_CASE("command line: exit codes") {
    CHECK(run_cli("expand 's[1,2]'").code == 2);
    CHECK(run_cli("expand 's[1,2]'").out.find("not a partition") != std::string::npos);
    CHECK(run_cli("expand").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("verify nonsense").code == 2);
    CHECK(run_cli("plethysm 's[2,2]' 's[3]' --method closed").code == 2);
    CHECK(run_cli("expand --perp 's[3]' '0'").code == 1);
    CHECK(run_cli("--help").code == 0);
}
