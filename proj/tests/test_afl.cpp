#include "doctest.h"
#include "heckeafl/afl.hpp"

using namespace heckeafl;

TEST_SUITE_BEGIN("afl");

static const PrimeConfig cfg = PrimeConfig::make(3);

TEST_CASE("fl check") {
    VerificationReport rep = fl_check(cfg, 12, 3, 1);
    CHECK(rep.all_pass());
    CHECK(rep.skipped == 0);
    CHECK(rep.cases.size() > 20);
}

TEST_CASE("afl check") {
    VerificationReport rep = afl_check(cfg, {1, 3, 5}, 4, 1);
    CHECK(rep.all_pass());
    // r = 1, m >= 1 cases assert 1 = 1; m = 0 asserts (r+1)/2
    CHECK(rep.cases[0].lhs == "1/1");  // (1+1)/2
    bool saw2 = false;
    for (const auto& c : rep.cases)
        if (c.inputs["r"] == 3 && c.inputs["m"] == 0) {
            CHECK(c.lhs == "2/1");
            CHECK(c.rhs == "2/1");
            saw2 = true;
        }
    CHECK(saw2);
    CHECK_THROWS_AS(afl_check(cfg, {2}, 1, 1), DomainError);
}

TEST_CASE("kernel check") {
    VerificationReport rep = kernel_check(cfg, 4, 7);
    CHECK(rep.all_pass());
    CHECK_THROWS_AS(kernel_check(cfg, 2, 7), DomainError);
}

TEST_CASE("coprimality check") {
    VerificationReport rep = coprimality_check({3, 5, 7, 11, 13});
    CHECK(rep.all_pass());
    CHECK(rep.cases.size() == 10);
    CHECK(rep.cases[0].inputs.contains("R2"));
}

TEST_CASE("comm check (small)") {
    VerificationReport rep = comm_check(3, 2, 2, 0);
    CHECK(rep.all_pass());
}

TEST_CASE("reports are deterministic") {
    VerificationReport a = fl_check(cfg, 5, 2, 42);
    VerificationReport b = fl_check(cfg, 5, 2, 42);
    CHECK(a.to_json().dump() == b.to_json().dump());
    VerificationReport c = fl_check(cfg, 5, 2, 43);
    CHECK(a.to_json().dump() != c.to_json().dump());
}

TEST_SUITE_END();
