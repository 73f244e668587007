#include "doctest.h"

#include "json.hpp"
#include "symplectica/parallel.hpp"
#include "symplectica/verify.hpp"

using namespace symplectica;

namespace {

SuiteSpec spec(char suite, std::size_t k, Mode mode = Mode::exhaustive, std::size_t samples = 50) {
    SuiteSpec s;
    s.suite = suite;
    s.p = 3;
    s.m = 2;
    s.k = k;
    s.mode = mode;
    s.samples = samples;
    s.seed = 42;
    return s;
}

// Clears the injected fault even when a check throws.
struct FaultScope {
    explicit FaultScope(std::string name) { set_fault_injection(std::move(name)); }
    ~FaultScope() { set_fault_injection(""); }
};

} // namespace

TEST_CASE("small suites pass") {
    for (char suite : {'A', 'C', 'E'}) {
        auto r = run_suite(spec(suite, 2));
        CHECK_MESSAGE(r.pass, "suite " << suite);
        CHECK(r.checks_run > 0);
    }
    auto g = run_suite(spec('G', 2));
    CHECK(g.pass);
    CHECK(g.metrics.at("automorphism_count.level2") == "103680");
}

TEST_CASE("suite C covers every pair at the middle level") {
    auto r = run_suite(spec('C', 2));
    CHECK(r.pass);
    CHECK(r.checks_run >= 90 * 89 / 2);
}

TEST_CASE("the report schema") {
    auto r = run_suite(spec('A', 0, Mode::sampled, 30));
    auto j = nlohmann::json::parse(report_to_json(r));
    CHECK(j.at("suite") == "A");
    CHECK(j.at("instance").at("p") == 3);
    CHECK(j.at("instance").at("m") == 2);
    CHECK(j.at("mode") == "sampled");
    CHECK(j.at("seed") == 42);
    CHECK(j.at("checks_run").get<std::size_t>() == r.checks_run);
    CHECK(j.at("failures").is_array());
    CHECK(j.contains("elapsed_ms"));
    CHECK(j.at("pass") == true);
    CHECK_FALSE(nlohmann::json::parse(report_to_json(run_suite(spec('A', 0)))).contains("seed"));
}

TEST_CASE("reports survive a round trip") {
    FaultScope fault("A.kappa");
    auto r = run_suite(spec('A', 0, Mode::sampled, 20));
    REQUIRE_FALSE(r.failures.empty());
    auto back = report_from_json(report_to_json(r));
    CHECK(report_to_json(back) == report_to_json(r));
    CHECK(back.failures.size() == r.failures.size());
    // zero-dimensional inputs come back without columns but replay the same
    for (const auto& f : back.failures) CHECK_FALSE(replay(f, 3, 2));
    CHECK_THROWS_AS(report_from_json("{\"suite\": 1}"), Error);
    CHECK_THROWS_AS(report_from_json("not json"), Error);
    CHECK_THROWS_AS(failure_from_json("{}"), Error);
}

TEST_CASE("equal seeds give byte-identical reports") {
    for (char suite : {'A', 'B', 'C', 'E'}) {
        auto a = report_to_json(run_suite(spec(suite, 2, Mode::sampled, 40)), false);
        auto b = report_to_json(run_suite(spec(suite, 2, Mode::sampled, 40)), false);
        CHECK_MESSAGE(a == b, "suite " << suite);
    }
    auto other = spec('A', 2, Mode::sampled, 40);
    other.seed = 43;
    CHECK(report_to_json(run_suite(other), false) != report_to_json(run_suite(spec('A', 2, Mode::sampled, 40)), false));
}

TEST_CASE("reports do not depend on the worker count") {
    set_thread_count(1);
    auto one = report_to_json(run_suite(spec('C', 3)), false);
    set_thread_count(4);
    auto four = report_to_json(run_suite(spec('C', 3)), false);
    set_thread_count(0);
    CHECK(one == four);
}

TEST_CASE("an injected fault is reported and replays as failing") {
    Failure record;
    {
        FaultScope fault("E.collinear_connected");
        auto r = run_suite(spec('E', 0));
        CHECK_FALSE(r.pass);
        REQUIRE(r.failures.size() == 3);
        for (const auto& f : r.failures) CHECK(f.check == "E.collinear_connected");
        record = failure_from_json(failure_to_json(r.failures[0]));
        CHECK_FALSE(replay(record, 3, 2));
        set_thread_count(1);
        CHECK_FALSE(replay(record, 3, 2));
        set_thread_count(0);
    }
    CHECK(replay(record, 3, 2));
}

TEST_CASE("failure records carry full bases") {
    FaultScope fault("B.point_in_plane");
    auto r = run_suite(spec('B', 0, Mode::sampled, 5));
    REQUIRE_FALSE(r.failures.empty());
    auto j = nlohmann::json::parse(failure_to_json(r.failures[0]));
    CHECK(j.at("check") == "B.point_in_plane");
    // one point of GF(3)^4: a single row of four entries
    CHECK(j.at("inputs").size() == 1);
    CHECK(j.at("inputs")[0].size() == 1);
    CHECK(j.at("inputs")[0][0].size() == 4);
}

TEST_CASE("malformed requests") {
    CHECK_THROWS_AS(run_suite(spec('Z', 2)), Error);
    CHECK_THROWS_AS(run_suite(spec('A', 4)), Error);
    CHECK_THROWS_AS(run_suite(spec('A', 0, Mode::sampled, 0)), Error);
    CHECK_THROWS_AS(run_suite(spec('F', 2)), Error);
    CHECK_THROWS_AS(check_function("A.no_such_check"), Error);
    CHECK_THROWS_AS(replay(Failure{"A.kappa", {}}, 3, 2), Error);
    CHECK(check_names().size() == 48);
}

TEST_CASE("exhaustive mode refuses large instances") {
    auto big = spec('D', 3);
    big.m = 3;
    try {
        (void)run_suite(big);
        FAIL("expected a size-bound refusal");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::size_bound);
    }
}
