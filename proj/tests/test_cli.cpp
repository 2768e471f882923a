#include <witt2/quadforms.hpp>

#include "doctest.h"
#include "json.hpp"

#include <cstdio>
#include <map>
#include <sstream>
#include <sys/wait.h>

using namespace witt2;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::map<std::string, std::string> kv;  // last value per key
};

Run run(const std::string& args) {
    Run r;
    const std::string cmd = std::string(WITT2_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::istringstream is(r.out);
    for (std::string line; std::getline(is, line);) {
        const auto eq = line.find('=');
        if (eq != std::string::npos && line.find(' ') == std::string::npos) r.kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return r;
}

// Records printed by enumerate / verify: space-separated key=value pairs.
std::vector<std::map<std::string, std::string>> records(const std::string& out) {
    std::vector<std::map<std::string, std::string>> rs;
    std::istringstream is(out);
    for (std::string line; std::getline(is, line);) {
        if (line.find(' ') == std::string::npos) continue;
        std::map<std::string, std::string> m;
        std::istringstream ls(line);
        for (std::string tok; ls >> tok;) {
            const auto eq = tok.find('=');
            REQUIRE(eq != std::string::npos);
            m[tok.substr(0, eq)] = tok.substr(eq + 1);
        }
        rs.push_back(m);
    }
    return rs;
}

const char* kF4 = "\"GF(2)[a]/(a^2+a+1)\"";

}  // namespace

TEST_CASE("trace-form examples") {
    auto r = run(std::string("trace-form --field ") + kF4 + " --ext \"x^3+x+a\"");
    CHECK(r.code == 0);
    CHECK(r.kv["residue"] == "[1,a]");
    CHECK(r.kv["witt_index"] == "0");
    CHECK(r.kv["irreducible"] == "false");

    r = run("trace-form --field \"GF(2)\" --ext \"x^4+x^3+1\"");
    CHECK(r.code == 0);
    CHECK(r.kv["hyperbolic"] == "true");
    CHECK(r.kv["witt_index"] == "2");

    r = run("trace-form --field \"GF(2)\" --ext \"x^2+x+1\"");
    CHECK(r.kv["residue"] == "[1,1]");

    r = run("trace-form --field \"GF(2)\" --ext \"x^3+x+1\" --bm");
    CHECK(r.code == 0);
    CHECK(r.kv["form"] == "bm");
    CHECK(r.kv["dim"] == "4");
    CHECK(r.kv["witt_index"] == "1");
    CHECK(r.kv["residue"] == "[1,1]");
}

TEST_CASE("audit basis re-checks") {
    auto r = run("trace-form --field \"GF(2)(t)\" --ext \"x^4+x^3+1\" --audit");
    REQUIRE(r.code == 0);
    FieldRef F = parse_field("GF(2)(t)");
    const QuadSpace q = parse_form(F, r.kv["Q"]);
    const ExtensionAlgebra E(parse_poly(F, "x^4+x^3+1"));
    CHECK(q.Q == second_trace_form(E).Q);
    for (int i = 1; i <= 2; ++i) {
        const std::string k = "audit.tnf" + std::to_string(i);
        const AlgebraElement e = E.parse(r.kv[k + ".e"]), f = E.parse(r.kv[k + ".f"]);
        CHECK(second_trace(E, e).is_one());  // planes [1, a_i]
        CHECK(trace_polar(E, e, f).is_one());
    }
}

TEST_CASE("is-2algebraic examples") {
    auto r = run("is-2algebraic --field \"GF(2)\" --form \"1,1;0,1\"");
    CHECK(r.code == 0);
    CHECK(r.kv["answer"] == "yes");
    CHECK(r.kv["witness"] == "x^2+x+1");

    r = run("is-2algebraic --field \"GF(2)\" --form \"0,1;0,0\"");
    CHECK(r.kv["answer"] == "yes");
    CHECK(r.kv["witness"] == "x^4+x^3+1");

    r = run("is-2algebraic --field \"GF(2)(t)\" --form \"1,1,0,0;0,1,0,0;0,0,t,t;0,0,0,t\"");
    CHECK(r.code == 0);
    CHECK(r.kv["answer"] == "no");
    CHECK(parse_form(parse_field("GF(2)(t)"), r.kv["residue"]).dim() == 4);
}

TEST_CASE("pmember examples") {
    auto r = run(std::string("pmember --field ") + kF4 + " --elem a");
    CHECK(r.code == 0);
    CHECK(r.kv["member"] == "false");

    r = run("pmember --field \"GF(2)(t)\" --elem \"t^2+t\"");
    CHECK(r.kv["member"] == "true");
    CHECK(r.kv["certificate"] == "t");

    r = run("pmember --field \"GF(2)\" --elem 1");
    CHECK(r.kv["member"] == "false");

    r = run("--json pmember --field \"GF(2)(t)\" --elem \"t^2+t\"");
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["member"] == true);
    CHECK(j["certificate"] == "t");
}

TEST_CASE("verify examples") {
    auto r = run("verify --theorem 3 --field \"GF(2)(t)\"");
    CHECK(r.code == 0);
    CHECK(r.kv["result"] == "PASS");

    r = run("verify --theorem 4 --field \"GF(2)(t)\" --a t --n 5");
    CHECK(r.code == 0);
    CHECK(r.kv["result"] == "PASS");
    CHECK(r.kv["witt_index"] == "2");

    r = run("verify --theorem 1 --field \"GF(2)\" --max-degree 5");
    CHECK(r.code == 0);
    CHECK(r.kv["result"] == "PASS");
    const auto rs = records(r.out);
    CHECK(rs.size() == 8);  // 2 of degree 3, 6 of degree 5
    for (const auto& rec : rs) CHECK(rec.at("result") == "PASS");

    r = run(std::string("verify --theorem 2 --field ") + kF4 + " --ext \"x^3+x+a\"");
    CHECK(r.code == 0);
    CHECK(r.kv["result"] == "PASS");
}

TEST_CASE("enumerate output re-parses") {
    auto r = run(std::string("enumerate --field ") + kF4 + " --max-degree 3 --threads 2");
    REQUIRE(r.code == 0);
    FieldRef F = parse_field("GF(2)[a]/(a^2+a+1)");
    const auto rs = records(r.out);
    CHECK(rs.size() == 26);
    CHECK(r.kv["count"] == "26");
    for (const auto& rec : rs) {
        const UniPoly p = parse_poly(F, rec.at("modulus"));
        CHECK(p.str() == rec.at("modulus"));
        const FieldValue a = parse_element(F, rec.at("tnf_a"));
        CHECK(a.str() == rec.at("tnf_a"));
        CHECK(rec.at("oracle") == "agree");
        const ExtensionAlgebra E(p);
        const TraceNormalForm tnf = trace_normal_form(E);
        CHECK(tnf.a_sum == a);
        if (rec.at("residue") != "none") {
            const std::string res = rec.at("residue");
            REQUIRE(res.front() == '[');
            const auto comma = res.find(',');
            const FieldValue b = parse_element(F, res.substr(comma + 1, res.size() - comma - 2));
            CHECK(b.str() == res.substr(comma + 1, res.size() - comma - 2));
            CHECK(tnf.report.residue->b == b);
        }
    }
    const auto j = nlohmann::json::parse(run(std::string("--json enumerate --field ") + kF4 + " --max-degree 2").out);
    CHECK(j["records"].size() == 6);
}

TEST_CASE("exit codes") {
    CHECK(run("pmember --field \"GF(3)\" --elem 1").code == 2);
    CHECK(run("trace-form --field \"GF(2)\" --ext \"x^2+\"").code == 2);
    CHECK(run("is-2algebraic --field \"GF(2)\" --form \"1,1;1,1\"").code == 2);
    CHECK(run("is-2algebraic --field \"GF(2)\" --form \"1,0;0,1\"").code == 2);  // degenerate polar form
    CHECK(run("nonsense").code == 2);
    CHECK(run("verify --theorem 4 --field \"GF(2)(t)\" --a t").code == 2);
    CHECK(run("enumerate --field \"GF(2)(t)\" --max-degree 3").code == 3);
    CHECK(run("pmember --field \"GF(2)(t)[y]/(y^3+t)\" --elem y").code == 3);
    CHECK(run("trace-form --field \"GF(2)\" --ext \"x^2+1\"").code == 4);
    CHECK(run("verify --theorem 4 --field \"GF(2)\" --a 1 --n 3").code == 4);
    CHECK(run("verify --theorem 3 --field \"GF(2)[a]/(a^2+a+1)\"").code == 4);
    CHECK(run("--help").code == 0);
}

TEST_CASE("deterministic output") {
    const std::string args = std::string("trace-form --field ") + kF4 + " --ext \"x^5+a\" --audit";
    CHECK(run(args).out == run(args).out);
    auto r = run("selfcheck --seed 11 --trials 50");
    CHECK(r.code == 0);
    CHECK(r.kv["failures"] == "0");
    CHECK(run("selfcheck --seed 11 --trials 50").out == r.out);
}
