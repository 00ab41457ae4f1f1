#include "doctest.h"
#include "specdata/verify.hpp"

using namespace specdata;

TEST_CASE("verify harness passes and is byte-deterministic") {
    VerifyConfig cfg;
    cfg.seed = 1;
    cfg.trials = 25;
    const auto first = run_verify(cfg);
    CHECK(first.all_pass);
    CHECK(first.failed_trials == 0);
    CHECK(first.report.find("RESULT PASS") != std::string::npos);

    const auto second = run_verify(cfg);
    CHECK(first.report == second.report);

    cfg.jobs = 4;
    const auto parallel = run_verify(cfg);
    CHECK(parallel.report == first.report);
}

TEST_CASE("verify harness works over a prime field") {
    VerifyConfig cfg;
    cfg.seed = 5;
    cfg.trials = 15;
    cfg.field = FieldDesc::prime(17);
    const auto out = run_verify(cfg);
    CHECK(out.all_pass);

    cfg.field = FieldDesc::prime(3);  // p <= nmax: Newton conversion impossible
    CHECK_THROWS_AS(run_verify(cfg), BadInputError);
}

TEST_CASE("an injected Newton sign flip is caught and named") {
    VerifyConfig cfg;
    cfg.seed = 1;
    cfg.trials = 25;
    cfg.inject_newton_bug = true;
    const auto out = run_verify(cfg);
    CHECK(!out.all_pass);
    CHECK(out.report.find("newton=FAIL") != std::string::npos);
    CHECK(out.report.find("RESULT FAIL") != std::string::npos);
    // The other checks stay green: the mutant is localized.
    CHECK(out.report.find("round_trip=FAIL") == std::string::npos);
    CHECK(out.report.find("cayley=FAIL") == std::string::npos);
}
