#include <string>
#include <vector>

#include "doctest.h"

#include "kgraph/errors.hpp"
#include "kgraph/graph.hpp"
#include "kgraph/suites.hpp"

#include "support.hpp"

using namespace kgraph;

namespace {

SuiteOptions quick() {
    SuiteOptions opt;
    opt.random_triples = 300;
    return opt;
}

void expect_all_pass(const KGraph& g, const std::string& name) {
    for (const CheckReport& rep : run_suite(g, name, quick())) {
        CHECK(!rep.items.empty());
        for (const CheckItem& item : rep.items) {
            INFO(rep.title, ": ", item.name, " ", item.detail);
            CHECK(item.pass);
        }
    }
}

}  // namespace

TEST_CASE("the suite registry knows its five names") {
    CHECK(suite_names() ==
          std::vector<std::string>{"combinatorics", "toeplitz", "bimodule", "katsura", "appendix"});
    KGraph q = support::load_fixture("square.kg");
    CHECK(run_suite(q, "all", quick()).size() == 5);
    CHECK_THROWS_AS((void)run_suite(q, "nope", quick()), Error);
}

TEST_CASE("every suite passes on the single-square fixture") {
    expect_all_pass(support::load_fixture("square.kg"), "all");
}

TEST_CASE("every suite passes on the deeper receiver fixture") {
    expect_all_pass(support::load_fixture("receivers.kg"), "all");
}

TEST_CASE("every suite passes on the ladder") {
    expect_all_pass(support::load_fixture("ladder.kg"), "all");
}

TEST_CASE("refusals count as passes where convexity fails") {
    KGraph r = support::load_fixture("remark.kg");
    expect_all_pass(r, "all");

    // the katsura suite must report the refusal rather than silence
    std::vector<CheckReport> reps = run_suite(r, "katsura", quick());
    REQUIRE(reps.size() == 1);
    bool saw_refusal = false;
    for (const CheckItem& item : reps[0].items)
        if (item.name.find("refus") != std::string::npos) saw_refusal = true;
    CHECK(saw_refusal);
}

TEST_CASE("cycles route to skips and formal-level checks") {
    KGraph c = support::load_fixture("cuntz_2.kg");
    expect_all_pass(c, "all");

    std::vector<CheckReport> reps = run_suite(c, "appendix", quick());
    REQUIRE(reps.size() == 1);
    bool saw_skip = false;
    for (const CheckItem& item : reps[0].items)
        if (item.detail.find("skipped") != std::string::npos) saw_skip = true;
    CHECK(saw_skip);

    std::vector<CheckReport> bims = run_suite(c, "bimodule", quick());
    bool saw_loop_check = false;
    for (const CheckItem& item : bims[0].items)
        if (item.name.find("loops escape") != std::string::npos) saw_loop_check = true;
    CHECK(saw_loop_check);
}

TEST_CASE("every suite passes on the three-colour cube") {
    expect_all_pass(support::load_fixture("cube_k3.kg"), "all");
}

TEST_CASE("single-colour graphs run the full gauntlet") {
    expect_all_pass(support::load_fixture("line_k1.kg"), "all");
}
