#include <gtest/gtest.h>

#include "moduli/suites.hpp"

using namespace moduli;

namespace {

SuiteParams small_params() {
    SuiteParams p;
    p.r_range = {3, 4};
    p.pq_range = {-2, 2};
    p.samples = 10;
    return p;
}

}  // namespace

TEST(ParseRange, ValidForms) {
    EXPECT_EQ(parse_range("3:10").lo, 3);
    EXPECT_EQ(parse_range("3:10").hi, 10);
    EXPECT_EQ(parse_range("-5:5").lo, -5);
    EXPECT_EQ(parse_range("-5:-1").hi, -1);
    EXPECT_EQ(parse_range("7").lo, 7);
    EXPECT_EQ(parse_range("7").hi, 7);
    EXPECT_EQ(parse_range("-5:5").count(), 11);
}

TEST(ParseRange, Rejects) {
    for (const char* bad : {"", "a:b", "5:3", "1:", ":4", "1:2:3", "1.5:2", "3:4x"}) {
        EXPECT_THROW(parse_range(bad), std::invalid_argument) << bad;
    }
}

TEST(Suites, UnknownNameAndBadLevels) {
    EXPECT_THROW(run_suite("nope", small_params()), std::invalid_argument);
    SuiteParams p = small_params();
    p.r_range = {2, 4};
    EXPECT_THROW(run_suite("uq-relations", p), std::invalid_argument);
}

TEST(Suites, AllPassOnSmallRanges) {
    const SuiteParams p = small_params();
    for (const std::string& name : suite_names()) {
        SuiteResult res;
        if (name == "toeplitz-lemmas") {
            res = run_toeplitz_lemmas(p, 3, 10);
        } else if (name == "product-to-sum") {
            res = run_product_to_sum(p, {-2, 2});
        } else if (name == "kauffman") {
            res = run_kauffman(p, {-1, 1});
        } else if (name == "star-formal") {
            res = run_star_formal(p, 10, 10, 4);
        } else {
            res = run_suite(name, p);
        }
        EXPECT_EQ(res.name, name);
        EXPECT_GT(res.cases, 0) << name;
        EXPECT_TRUE(res.pass()) << name << " " << nlohmann::json(res).dump();
    }
}

TEST(Suites, EquivalenceCaseCount) {
    SuiteParams p = small_params();
    const SuiteResult res = run_equivalence(p);
    EXPECT_EQ(res.cases, 2 * 25);
    EXPECT_LT(res.worst_residual, 1e-8);
}

TEST(Suites, KauffmanAssertsInequalityForOddQ) {
    SuiteParams p = small_params();
    p.r_range = {3, 3};
    const SuiteResult res = run_kauffman(p, {0, 0});
    // pq in -2..2: 25 parity checks, 10 odd-q inequality checks, 1 product-to-sum case
    EXPECT_EQ(res.cases, 25 + 10 + 1);
    EXPECT_EQ(res.details.at("odd_q_differing_from_cosine"), 10);
}

TEST(Suites, ToeplitzRegimeCoverageIsAsserted) {
    SuiteParams p = small_params();
    p.r_range = {3, 3};
    const SuiteResult low = run_toeplitz_lemmas(p, 2, 10);
    EXPECT_TRUE(low.pass());
    const SuiteResult high = run_toeplitz_lemmas(p, 2, 1000000);
    EXPECT_FALSE(high.pass());
    EXPECT_EQ(high.failures, 1);
}

TEST(Report, DeterministicJsonAndCsv) {
    const SuiteParams p = small_params();
    const auto build = [&] {
        VerificationReport rep;
        rep.parameters = params_to_json(p);
        rep.suites.push_back(run_suite("theta-identities", p));
        rep.suites.push_back(run_suite("cocycle", p));
        rep.suites.push_back(run_star_formal(p, 10, 10, 4));
        return rep;
    };
    const VerificationReport a = build();
    const VerificationReport b = build();
    EXPECT_EQ(nlohmann::json(a).dump(2), nlohmann::json(b).dump(2));
    EXPECT_EQ(report_to_csv(a), report_to_csv(b));
    const nlohmann::json j = a;
    EXPECT_EQ(j.at("parameters").at("seed"), p.seed);
    EXPECT_EQ(j.at("tool_version"), kToolVersion);
    EXPECT_TRUE(j.at("timestamp").is_null());
    EXPECT_TRUE(j.at("pass").get<bool>());
    EXPECT_EQ(report_to_csv(a).substr(0, 40), "suite,cases,failures,worst_residual,pass");
}

TEST(Report, SeedChangesRandomizedSuites) {
    SuiteParams p = small_params();
    const SuiteResult a = run_suite("theta-identities", p);
    p.seed += 1;
    const SuiteResult b = run_suite("theta-identities", p);
    EXPECT_EQ(a.cases, b.cases);
    EXPECT_NE(nlohmann::json(a).dump(), nlohmann::json(b).dump());
}

TEST(Report, FailureMakesReportFail) {
    VerificationReport rep;
    SuiteResult ok{"a"};
    ok.record(0.1, 1.0);
    SuiteResult bad{"b"};
    bad.record(2.0, 1.0);
    rep.suites = {ok};
    EXPECT_TRUE(rep.pass());
    rep.suites.push_back(bad);
    EXPECT_FALSE(rep.pass());
    EXPECT_EQ(bad.worst_residual, 2.0);
}

TEST(Parallel, ThreadEnvironmentCap) {
    setenv("MODULI_THREADS", "1", 1);
    EXPECT_EQ(worker_count(), 1u);
    setenv("MODULI_THREADS", "3", 1);
    EXPECT_EQ(worker_count(), std::min(3u, std::max(1u, std::thread::hardware_concurrency())));
    unsetenv("MODULI_THREADS");
    EXPECT_GE(worker_count(), 1u);
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) {
        EXPECT_EQ(h, 1);
    }
}
