#include <doctest.h>

#include <cstdlib>
#include <set>

#include "nanofet/errors.hpp"
#include "nanofet/repro.hpp"

using namespace nanofet;

namespace {

std::filesystem::path data_dir() {
    const char* env = std::getenv("NANOFET_DATA_DIR");
    REQUIRE(env != nullptr);
    return env;
}

} // namespace

TEST_CASE("every row passes against the bundled data") {
    const ReproReport report = run_paper_repro(data_dir());
    CHECK(report.all_pass);
    CHECK(report.warnings.empty());
    for (const ReproRow& row : report.rows) {
        INFO(row.module, ": ", row.quantity);
        CHECK(row.pass);
    }
}

TEST_CASE("the report touches every module") {
    const ReproReport report = run_paper_repro(data_dir());
    std::set<std::string> modules;
    for (const ReproRow& row : report.rows) modules.insert(row.module);
    const std::set<std::string> expected{"geometry", "electronic", "energetics", "performance",
                                         "io"};
    CHECK(modules == expected);
}

TEST_CASE("strict-ln capacitance still passes at 5%") {
    const ReproReport report = run_paper_repro(data_dir(), true);
    bool found = false;
    for (const ReproRow& row : report.rows) {
        if (row.quantity != "gate capacitance") continue;
        found = true;
        CHECK(row.pass);
        CHECK(row.computed == doctest::Approx(1.14528e-18).epsilon(1e-4));
    }
    CHECK(found);
    CHECK(report.all_pass);
}

TEST_CASE("missing data directory names the absent file") {
    CHECK_THROWS_WITH_AS(run_paper_repro("/nonexistent-dir-for-test"),
                         doctest::Contains("channel_gap_series.csv"), MissingData);
}

TEST_CASE("formatting produces one line per row") {
    const ReproReport report = run_paper_repro(data_dir());
    const std::string text = format_report(report);
    std::size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    CHECK(lines == report.rows.size() + 2);  // header + rows + footer
    CHECK(text.find("FAIL") == std::string::npos);
}
