#include <catch2/catch_amalgamated.hpp>

#include "astenum/verify.hpp"

using namespace astenum;

TEST_CASE("verify reports are reproducible across jobs settings") {
    verify::Suite suite = verify::standard_suite(2, 3, 2);
    auto serial = suite.run(1);
    auto parallel = suite.run(4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].name == parallel[i].name);
        CHECK(serial[i].params == parallel[i].params);
        CHECK(serial[i].pass == parallel[i].pass);
        CHECK(serial[i].expected == parallel[i].expected);
        CHECK(serial[i].actual == parallel[i].actual);
    }
    CHECK(verify::all_passed(serial));
}

TEST_CASE("report rendering") {
    CHECK(verify::report_csv({}) == "check,params,status,expected,actual,elapsed_ms\n");
    std::vector<verify::CheckResult> rows(1);
    rows[0].name = "demo";
    rows[0].params = "n=1,l=2";
    rows[0].pass = false;
    rows[0].expected = "a, \"b\"";
    rows[0].actual = "c";
    auto csv = verify::report_csv(rows);
    CHECK(csv.find("\"n=1,l=2\"") != std::string::npos);
    CHECK(csv.find("\"a, \"\"b\"\"\"") != std::string::npos);
    CHECK(verify::report_text(rows).find("FAIL") != std::string::npos);
    CHECK(verify::report_json(rows)[0]["status"] == "fail");
    CHECK_FALSE(verify::all_passed(rows));
}

TEST_CASE("suite rows report exceptions as failures") {
    verify::Suite suite;
    suite.add("boom", "x=1", []() -> verify::Outcome { throw std::runtime_error("kaput"); });
    auto results = suite.run(1);
    REQUIRE(results.size() == 1);
    CHECK_FALSE(results[0].pass);
    CHECK(results[0].actual.find("kaput") != std::string::npos);
}
