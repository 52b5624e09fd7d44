#include "tct/io.hpp"

#include "tct/gmwct.hpp"
#include "tct/oracle.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace tct;

namespace {

Instance parse_text(const std::string& text)
{
    std::istringstream in(text);
    return parse_instance(in);
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& text)
    {
        static int counter = 0;
        path = "tct_test_tmp_" + std::to_string(counter++) + ".txt";
        std::ofstream out(path);
        out << text;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

int run(std::vector<std::string> args)
{
    std::vector<const char*> argv{"tct"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    return run_cli((int)argv.size(), argv.data());
}

} // namespace

TEST_CASE("a minimal instance parses")
{
    Instance inst = parse_text("c tiny\np tct 3 mct\ne 1 2\ne 2 3\nq 1 3\nk 1\n");
    CHECK(inst.n == 3);
    CHECK(inst.requests.size() == 1);
    CHECK(inst.k == 1);
}

TEST_CASE("a duplicate edge is not a tree")
{
    CHECK_THROWS_AS(parse_text("p tct 3 mct\ne 1 2\ne 1 2\nq 1 3\n"), BuildError);
}

TEST_CASE("costs are rejected outside the weighted mode")
{
    CHECK_THROWS_AS(parse_text("p tct 2 mct\ne 1 2 5\n"), ParseError);
}

TEST_CASE("requests are rejected in terminal-set modes")
{
    CHECK_THROWS_AS(parse_text("p tct 2 gmwct\ne 1 2\nq 1 2\n"), ParseError);
}

TEST_CASE("print and parse round-trip")
{
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        GenSpec spec;
        spec.seed = seed;
        spec.edges = 3 + (int)(seed % 9);
        spec.requests = 1 + (int)(seed % 6);
        if (seed % 3 == 0) {
            spec.q = 2;
            spec.weighted = seed % 2 != 0;
        }
        Instance a = generate(spec);
        std::ostringstream out;
        print_instance(out, a);
        Instance b = parse_text(out.str());
        CHECK(a.n == b.n);
        CHECK(a.mode == b.mode);
        CHECK(a.requests == b.requests);
        CHECK(a.terminal_sets == b.terminal_sets);
        REQUIRE(a.edges.size() == b.edges.size());
        for (size_t i = 0; i < a.edges.size(); ++i) {
            CHECK(a.edges[i].u == b.edges[i].u);
            CHECK(a.edges[i].v == b.edges[i].v);
            CHECK(a.edges[i].cost == b.edges[i].cost);
        }
    }
}

TEST_CASE("exit codes follow the contract")
{
    TempFile inst("p tct 4 mct\ne 1 2\ne 1 3\ne 1 4\nq 2 3\nq 2 4\nq 3 4\n");

    SUBCASE("decision yes is 0")
    {
        CHECK(run({"solve", "--input", inst.path, "--k", "2"}) == 0);
    }
    SUBCASE("decision no is 1")
    {
        CHECK(run({"solve", "--input", inst.path, "--k", "1"}) == 1);
    }
    SUBCASE("optimization is 0")
    {
        CHECK(run({"solve", "--input", inst.path, "--min"}) == 0);
    }
    SUBCASE("missing arguments are usage errors")
    {
        CHECK(run({"solve"}) == 2);
        CHECK(run({"nonsense"}) == 2);
        CHECK(run({"solve", "--input", "no_such_file.txt", "--min"}) == 2);
    }
    SUBCASE("verify distinguishes valid from invalid cuts")
    {
        TempFile good("e 1 2\ne 1 3\n");
        TempFile bad("e 1 2\n");
        CHECK(run({"verify", "--input", inst.path, "--cut", good.path}) == 0);
        CHECK(run({"verify", "--input", inst.path, "--cut", bad.path}) == 1);
    }
    SUBCASE("reduce emits a parseable instance")
    {
        CHECK(run({"reduce", "--input", inst.path}) == 0);
    }
}

TEST_CASE("weighted decision compares cost against the budget")
{
    TempFile inst("p tct 3 wgmwct\ne 1 2 4\ne 2 3 9\nt 1 1 3\n");
    CHECK(run({"solve", "--input", inst.path, "--k", "4"}) == 0);
    CHECK(run({"solve", "--input", inst.path, "--k", "3"}) == 1);
}

TEST_CASE("gen writes gadgets that parse back")
{
    TempFile out("");
    CHECK(run({"gen", "--gadget", "special-quadruple", "--out", out.path}) == 0);
    Instance inst = parse_instance_file(out.path);
    CHECK(inst.n == 5);
    CHECK(inst.requests.size() == 4);
}
