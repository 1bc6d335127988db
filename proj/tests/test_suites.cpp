#include <doctest.h>

#include "kleinian/report.hpp"
#include "kleinian/suites.hpp"

using namespace kleinian;
using catalog::Suite;

TEST_CASE("every section suite passes") {
    for (Suite s : {Suite::Section2, Suite::Section3, Suite::Section4, Suite::Section5,
                    Suite::Section6}) {
        auto checks = suites::section_checks(s);
        CHECK(!checks.empty());
        for (const auto& c : checks) {
            INFO(c.id << ": " << c.details);
            CHECK(c.status == CheckStatus::Pass);
        }
    }
}

TEST_CASE("geometry suite passes") {
    for (const auto& c : suites::geometry_checks()) {
        INFO(c.id << ": " << c.details);
        CHECK(c.status == CheckStatus::Pass);
    }
}

TEST_CASE("property suites pass on a reduced sample count") {
    for (const auto& c : suites::property_checks(200)) {
        INFO(c.id << ": " << c.details);
        CHECK(c.status == CheckStatus::Pass);
    }
}

TEST_CASE("suite runs are deterministic") {
    Report a{.command = "verify", .timestamp = std::nullopt, .checks = suites::section_checks(Suite::Section2)};
    Report b{.command = "verify", .timestamp = std::nullopt, .checks = suites::section_checks(Suite::Section2)};
    CHECK(a.to_json() == b.to_json());
    CHECK(a.exit_code() == 0);
    CHECK(a.failed() == 0);
    CHECK(a.passed() == static_cast<int>(a.checks.size()));
}

TEST_CASE("report serialization shape") {
    Report r{.command = "demo", .timestamp = std::nullopt, .checks = {}};
    r.checks.push_back({"one", CheckStatus::Pass, "fine", std::nullopt});
    r.checks.push_back({"two", CheckStatus::Fail, "broken", std::string("false")});
    CHECK(r.exit_code() == 1);
    std::string j = r.to_json(false);
    CHECK(j.find("\"tool\":\"kleinian\"") != std::string::npos);
    CHECK(j.find("\"summary\":{\"pass\":1,\"fail\":1,\"inconclusive\":0}") != std::string::npos);
    CHECK(j.find("\"result\":false") != std::string::npos);
    CHECK(j.find("timestamp") == std::string::npos);
    std::string t = r.to_text();
    CHECK(t.find("[FAIL] two") != std::string::npos);
}
