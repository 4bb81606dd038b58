#include <doctest.h>

#include "backstable/verify.hpp"

using namespace backstable;

TEST_CASE("suite registry") {
    auto names = suite_names();
    CHECK(names.size() == 17);
    for (auto& n : names) CHECK(default_suite_size(n) >= 3);
    CHECK_THROWS(run_suite("no-such-suite", 3));
}

TEST_CASE("suites at reduced scale") {
    SuiteReport r = run_suite("bjs", 3);
    CHECK(r.name == "bjs");
    CHECK(r.cases == 26);  // 6 direct plus 20 sampled in the next rank
    CHECK(r.passed());
    CHECK(r.seconds >= 0);
    // size zero runs nothing and trivially passes
    SuiteReport empty = run_suite("kl", 0);
    CHECK(empty.cases == 0);
    CHECK(empty.passed());
}
