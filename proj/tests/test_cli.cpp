#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "maxsub/cli.hpp"

using namespace maxsub;

namespace {

CliResult run(std::vector<std::string> args) { return run_cli(args); }

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("steinitz arithmetic commands") {
    CliResult r = run({"st", "mul", "2^3*3^inf", "2"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"result\":\"2^4 * 3^inf\"}\n");
    CHECK(r.err.empty());

    CHECK(run({"st", "divides", "2^2", "2^inf"}).out == "{\"result\":true}\n");
    CHECK(run({"st", "stable", "2^2*3*5^inf"}).out == "{\"result\":\"5^inf\"}\n");
    CHECK(run({"st", "finite", "2^2*3*5^inf"}).out == "{\"result\":\"2^2 * 3\"}\n");
    CHECK(run({"st", "nat", "2^4*3^2"}).out == "{\"result\":\"144\"}\n");
    CHECK(run({"st", "nat", "2^inf"}).out == "{\"result\":null}\n");
    CHECK(run({"st", "meet", "2^2*3", "2*5"}).out == "{\"result\":\"2\"}\n");
    CHECK(run({"st", "join", "2^2*3", "2*5"}).out == "{\"result\":\"2^2 * 3 * 5\"}\n");
    CHECK(run({"st", "div", "2^4*3^inf", "2"}).out == "{\"result\":\"2^3 * 3^inf\"}\n");
}

TEST_CASE("exit codes separate usage, domain, and mismatch failures") {
    CHECK(run({"st", "mul", "2^3*3^inf", "2"}).exit_code == 0);

    // domain errors
    CHECK(run({"st", "div", "2", "3"}).exit_code == 1);
    CHECK(run({"st", "div", "2^inf", "2^inf"}).exit_code == 1);
    CHECK(run({"st", "mul", "not-a-number", "2"}).exit_code == 1);
    CHECK(run({"ring", "subrings", "Z/1000Z"}).exit_code == 1);
    CHECK(run({"field", "adjoin", "GF(2^2^inf)", "2"}).exit_code == 1);
    CHECK(run({"place", "witness", "GF(2^all^inf)"}).exit_code == 1);

    // usage errors
    CHECK(run({"st", "frobnicate", "2"}).exit_code == 2);
    CHECK(run({"st", "mul", "2"}).exit_code == 2);  // missing second operand
    CHECK(run({}).exit_code == 2);
    CHECK(run({"definitely-not-a-subcommand"}).exit_code == 2);
    CHECK(run({"verify", "nope"}).exit_code == 2);
    CHECK(run({"field", "irr", "GF(2^1)", "three"}).exit_code == 2);

    // diagnostics go to stderr, not stdout
    CliResult bad = run({"st", "frobnicate", "2"});
    CHECK(bad.out.empty());
    CHECK(!bad.err.empty());

    CHECK(run({"--help"}).exit_code == 0);
    CHECK(contains(run({"--help"}).out, "maxsub"));
}

TEST_CASE("field commands") {
    CliResult r = run({"field", "maximal", "GF(2^2^2*3*5^inf)"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"primes\":[2,3]"));
    CHECK(contains(r.out, "GF(2^2*3*5^inf)"));
    CHECK(contains(r.out, "GF(2^2^2*5^inf)"));

    CHECK(run({"field", "subfield", "GF(2^2)", "GF(2^2^2*3)"}).out == "{\"result\":true}\n");
    CHECK(run({"field", "degree", "GF(2^2)", "GF(2^2^2*3)"}).out ==
          "{\"finite\":true,\"result\":\"6\"}\n");
    CHECK(run({"field", "degree", "GF(2^2)", "GF(2^2^inf)"}).out ==
          "{\"finite\":false,\"result\":null}\n");
    CHECK(run({"field", "count", "GF(2^2^2*3*5^inf)"}).out ==
          "{\"finite\":true,\"result\":2}\n");
    CHECK(run({"field", "core", "GF(2^2^2*3*5^inf)"}).out == "{\"result\":\"GF(2^5^inf)\"}\n");
    CHECK(run({"field", "chainlen", "GF(2^2^2*3*5^inf)"}).out ==
          "{\"length\":3,\"count\":\"3\"}\n");
    CHECK(run({"field", "irr", "GF(2^2^inf)", "2"}).out == "{\"result\":false}\n");
    CHECK(run({"field", "irr", "GF(2^2^inf)", "3"}).out == "{\"result\":true}\n");
    CHECK(run({"field", "adjoin", "GF(2^3^inf)", "2"}).out ==
          "{\"result\":\"GF(2^2*3^inf)\"}\n");
    CHECK(run({"field", "closed", "GF(2^all^inf)"}).out == "{\"result\":true}\n");

    CliResult chains = run({"field", "chains", "GF(2^2*3)"});
    CHECK(chains.exit_code == 0);
    CHECK(chains.out ==
          "{\"chain\":[\"GF(2^2*3)\",\"GF(2^3)\",\"GF(2^1)\"]}\n"
          "{\"chain\":[\"GF(2^2*3)\",\"GF(2^2)\",\"GF(2^1)\"]}\n");
    CHECK(run({"field", "chains", "GF(2^2*3*5*7)", "--limit", "3"}).exit_code == 1);
}

TEST_CASE("ring commands") {
    CHECK(run({"ring", "build", "GF(2,2)"}).out ==
          "{\"spec\":\"GF(2,2)\",\"order\":4,\"characteristic\":2,\"is_field\":true}\n");

    CliResult subs = run({"ring", "subrings", "GF(2,4)"});
    CHECK(subs.exit_code == 0);
    CHECK(contains(subs.out, "{\"id\":0,\"size\":2,\"elements\":[0,1]}"));
    CHECK(std::count(subs.out.begin(), subs.out.end(), '\n') == 3);

    CliResult maxi = run({"ring", "maximal", "GF(2,4)"});
    CHECK(std::count(maxi.out.begin(), maxi.out.end(), '\n') == 1);
    CHECK(contains(maxi.out, "\"size\":4"));

    CliResult iso = run({"ring", "iso", "Z/6Z", "product(GF(2,1),GF(3,1))"});
    CHECK(iso.exit_code == 0);
    CHECK(contains(iso.out, "\"result\":true"));
    CHECK(contains(iso.out, "\"witness\":[0,"));
    CHECK(contains(run({"ring", "iso", "Z/4Z", "GF(2,2)"}).out, "\"result\":false"));

    CliResult cls = run({"ring", "classify", "product(GF(2,2),GF(2,2))"});
    CHECK(contains(cls.out, "\"iso_classes\":2"));

    // serial execution must not change any output
    CHECK(run({"ring", "subrings", "product(GF(2,2),GF(2,2))", "--serial"}).out ==
          run({"ring", "subrings", "product(GF(2,2),GF(2,2))"}).out);

    // a tightened cap turns a previously fine ring into a domain error
    CHECK(run({"ring", "subrings", "GF(2,4)", "--max-order", "8"}).exit_code == 1);
}

TEST_CASE("place commands") {
    CliResult lst = run({"place", "list", "GF(2,1)", "1"});
    CHECK(lst.out ==
          "{\"place\":\"place(x)\",\"residue_degree\":1,\"residue\":\"GF(2^1)\"}\n"
          "{\"place\":\"place(x+1)\",\"residue_degree\":1,\"residue\":\"GF(2^1)\"}\n"
          "{\"place\":\"place(inf)\",\"residue_degree\":1,\"residue\":\"GF(2^1)\"}\n");

    CHECK(run({"place", "residue", "GF(2,1)", "place(x^2+x+1)"}).out ==
          "{\"result\":\"GF(2^2)\"}\n");

    CliResult disc = run({"place", "discriminate", "GF(2,1)", "place(x)", "place(x^2+x+1)"});
    CHECK(contains(disc.out, "\"result\":\"NotIsomorphic\""));
    CHECK(contains(run({"place", "discriminate", "GF(2,1)", "place(x)", "place(x+1)"}).out,
                   "\"result\":\"Inconclusive\""));

    CliResult orb = run({"place", "orbit", "GF(2,1)", "place(x)"});
    CHECK(std::count(orb.out.begin(), orb.out.end(), '\n') == 3);

    CliResult wit = run({"place", "witness", "GF(2^2^inf)", "--limit", "2"});
    CHECK(wit.out ==
          "{\"degree\":\"3\",\"prime\":3,\"power\":1,\"residue\":\"GF(2^2^inf*3)\"}\n"
          "{\"degree\":\"3^2\",\"prime\":3,\"power\":2,\"residue\":\"GF(2^2^inf*3^2)\"}\n");
    // default stream length is ten entries
    CliResult wit10 = run({"place", "witness", "GF(2^1)"});
    CHECK(std::count(wit10.out.begin(), wit10.out.end(), '\n') == 10);
}

TEST_CASE("verify commands") {
    CliResult kxk = run({"verify", "kxk", "GF(2,2)"});
    CHECK(kxk.exit_code == 0);
    CHECK(contains(kxk.out, "\"matched\":true"));
    CHECK(contains(kxk.out, "\"iso_classes\":2"));

    CliResult dual = run({"verify", "dual", "GF(3,1)"});
    CHECK(dual.exit_code == 0);
    CHECK(contains(dual.out, "\"matched\":true"));

    CliResult prod = run({"verify", "product", "2", "2"});
    CHECK(prod.exit_code == 0);
    CHECK(contains(prod.out, "\"iso_classes\":1"));

    CliResult places = run({"verify", "places", "GF(2,1)"});
    CHECK(places.exit_code == 0);
    CHECK(contains(places.out, "\"matched\":true"));

    CliResult rats = run({"verify", "rationals", "--primes", "4", "--pairs", "50"});
    CHECK(rats.exit_code == 0);
    CHECK(contains(rats.out, "\"iso_classes\":4"));
}

TEST_CASE("output formats") {
    CliResult table = run({"st", "mul", "2^3", "3", "--format", "table"});
    CHECK(table.out == "result: 2^3 * 3\n");

    CliResult csv = run({"ring", "subrings", "GF(2,4)", "--format", "csv"});
    CHECK(contains(csv.out, "id,size,elements"));
    CHECK(contains(csv.out, "0,2,\"[0,1]\""));

    CHECK(run({"st", "mul", "2", "3", "--format", "yaml"}).exit_code == 2);

    // byte-identical reruns
    CHECK(run({"verify", "kxk", "GF(2,2)"}).out == run({"verify", "kxk", "GF(2,2)"}).out);
    CHECK(run({"ring", "classify", "product(GF(3,2),GF(3,2))"}).out ==
          run({"ring", "classify", "product(GF(3,2),GF(3,2))"}).out);
}
