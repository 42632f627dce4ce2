#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <string>

#include "doctest.h"

#include "support.hpp"

namespace {

struct RunResult {
    int status = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(KG_BINARY) + " " + args + " 2>&1";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) res.output.append(buf, got);
    int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

std::string fx(const std::string& name) { return support::fixture_path(name); }

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("validate prints a one-line summary") {
    RunResult res = run("validate " + fx("square.kg"));
    CHECK(res.status == 0);
    CHECK(contains(res.output, "ok: k=2, 4 vertices, 4 edges, 1 squares"));
}

TEST_CASE("missing and malformed inputs exit with an error") {
    RunResult res = run("validate /no/such/file.kg");
    CHECK(res.status == 2);
    CHECK(contains(res.output, "error:"));

    RunResult bad = run("validate " + fx("broken_dangling.kg"));
    CHECK(bad.status == 2);
    CHECK(contains(bad.output, "ghost"));
}

TEST_CASE("analyze summarizes the fixture") {
    RunResult res = run("analyze " + fx("remark.kg"));
    CHECK(res.status == 0);
    CHECK(contains(res.output, "locally convex: no"));
    CHECK(contains(res.output, "K_0(TC*) = Z^3"));

    RunResult cz = run("analyze " + fx("cuntz_2.kg"));
    CHECK(cz.status == 0);
    CHECK(contains(cz.output, "K_0(TC*) = Z (free"));
    CHECK(!contains(cz.output, "K_0(TC*) = Z^"));
}

TEST_CASE("fe lists the edge-level exhaustive sets") {
    RunResult res = run("fe " + fx("remark.kg"));
    CHECK(res.status == 0);
    CHECK(contains(res.output, "{lam, mu}"));

    RunResult at = run("fe " + fx("square.kg") + " --vertex A");
    CHECK(at.status == 0);
    CHECK(contains(at.output, "{f1}"));
    CHECK(contains(at.output, "{f1, g1}"));
    CHECK(!contains(at.output, "{g2}"));
}

TEST_CASE("katsura needs a colour and prints the block") {
    RunResult res = run("katsura " + fx("square.kg") + " --color 1");
    CHECK(res.status == 0);
    CHECK(contains(res.output, "katsura data, color 1:"));
    CHECK(contains(res.output, "generators"));

    RunResult noarg = run("katsura " + fx("square.kg"));
    CHECK(noarg.status != 0);

    RunResult refuse = run("katsura " + fx("remark.kg") + " --color 1");
    CHECK(refuse.status == 2);
    CHECK(contains(refuse.output, "error:"));
}

TEST_CASE("reduce-fe emits a verified certificate") {
    RunResult res = run("reduce-fe " + fx("square.kg") + " --vertex A --set f1.g2");
    CHECK(res.status == 0);
    CHECK(contains(res.output, "reduction certificate"));
    CHECK(contains(res.output, "verified: yes"));
    CHECK(contains(res.output, "node 0: vertex A, L=2"));

    RunResult bad = run("reduce-fe " + fx("remark.kg") + " --vertex v --set lam");
    CHECK(bad.status == 2);
}

TEST_CASE("verify runs the named suite and reports counts") {
    RunResult res = run("verify " + fx("square.kg") + " --suite combinatorics");
    CHECK(res.status == 0);
    CHECK(contains(res.output, "suite combinatorics"));
    CHECK(contains(res.output, "0 failed"));

    RunResult unknown = run("verify " + fx("square.kg") + " --suite nope");
    CHECK(unknown.status == 2);
    CHECK(contains(unknown.output, "unknown suite"));
}

TEST_CASE("output files are honored") {
    std::string out = std::string(FIXTURES_DIR) + "/../cli_analyze_out.txt";
    std::remove(out.c_str());
    RunResult res = run("analyze " + fx("square.kg") + " --out " + out);
    CHECK(res.status == 0);
    std::ifstream in(out);
    REQUIRE(in.good());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(contains(text, "locally convex: yes"));
    std::remove(out.c_str());
}
