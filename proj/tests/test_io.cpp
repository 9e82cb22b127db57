#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "nanofet/errors.hpp"
#include "nanofet/passivate.hpp"
#include "nanofet/table.hpp"
#include "nanofet/xyz.hpp"

using namespace nanofet;

namespace {

MolecularStructure methane() {
    MolecularStructure atom;
    atom.atoms.push_back({Element::C, {0, 0, 0}});
    MolecularStructure out = passivate_hydrogen(atom);
    out.label = "methane";
    return out;
}

MolecularStructure random_structure(std::mt19937& rng) {
    std::uniform_int_distribution<int> count(0, 30);
    std::uniform_real_distribution<double> coord(-50.0, 50.0);
    std::uniform_int_distribution<int> kind(0, 1);
    MolecularStructure s;
    s.label = "random";
    const int n = count(rng);
    for (int i = 0; i < n; ++i)
        s.atoms.push_back(
            {kind(rng) ? Element::C : Element::H, {coord(rng), coord(rng), coord(rng)}});
    return s;
}

} // namespace

TEST_CASE("methane XYZ matches the golden file byte for byte") {
    const std::string text = write_xyz(methane());
    CHECK(text.substr(0, 2) == "5\n");

    const char* golden_dir = std::getenv("NANOFET_GOLDEN_DIR");
    REQUIRE(golden_dir != nullptr);
    std::ifstream golden(std::string(golden_dir) + "/methane.xyz", std::ios::binary);
    REQUIRE(golden.good());
    std::ostringstream buf;
    buf << golden.rdbuf();
    CHECK(text == buf.str());
}

TEST_CASE("empty structure serializes to a bare header") {
    MolecularStructure empty;
    empty.label = "empty";
    CHECK(write_xyz(empty) == "0\nempty\n");
    const MolecularStructure back = read_xyz(write_xyz(empty));
    CHECK(back.atoms.empty());
    CHECK(back.label == "empty");
}

TEST_CASE("xyz round trip on 1000 random structures") {
    std::mt19937 rng(20250104);
    for (int trial = 0; trial < 1000; ++trial) {
        const MolecularStructure s = random_structure(rng);
        const MolecularStructure back = read_xyz(write_xyz(s));
        REQUIRE(back.size() == s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            REQUIRE(back.atoms[i].element == s.atoms[i].element);
            REQUIRE(std::abs(back.atoms[i].position_nm.x - s.atoms[i].position_nm.x) < 1e-6);
            REQUIRE(std::abs(back.atoms[i].position_nm.y - s.atoms[i].position_nm.y) < 1e-6);
            REQUIRE(std::abs(back.atoms[i].position_nm.z - s.atoms[i].position_nm.z) < 1e-6);
        }
    }
}

TEST_CASE("xyz serialization is deterministic") {
    const MolecularStructure m = methane();
    CHECK(write_xyz(m) == write_xyz(m));
}

TEST_CASE("xyz parse errors carry the line number") {
    CHECK_THROWS_WITH_AS(read_xyz("5\ncomment\nC 0 0 0\n"), doctest::Contains("line 5"),
                         ParseError);
    CHECK_THROWS_WITH_AS(read_xyz("1\ncomment\nXx 0 0 0\n"), doctest::Contains("Xx"), ParseError);
    CHECK_THROWS_WITH_AS(read_xyz("1\ncomment\nC 0 zero 0\n"), doctest::Contains("line 3"),
                         ParseError);
    CHECK_THROWS_WITH_AS(read_xyz("banana\ncomment\n"), doctest::Contains("line 1"), ParseError);
    CHECK_THROWS_AS(read_xyz("1\ncomment\nC 0 0\n"), ParseError);
}

TEST_CASE("table round trip on 1000 random tables") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> cols(1, 6), rows(0, 8);
    std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
    std::uniform_int_distribution<int> exponent(-12, 12);
    for (int trial = 0; trial < 1000; ++trial) {
        TableDocument doc;
        const int c = cols(rng);
        for (int j = 0; j < c; ++j) doc.header.push_back("col" + std::to_string(j));
        const int r = rows(rng);
        for (int i = 0; i < r; ++i) {
            std::vector<double> row;
            for (int j = 0; j < c; ++j)
                row.push_back(mantissa(rng) * std::pow(10.0, exponent(rng)));
            doc.rows.push_back(row);
        }
        const TableDocument back = read_table(write_table(doc));
        REQUIRE(back.header == doc.header);
        REQUIRE(back.rows.size() == doc.rows.size());
        for (std::size_t i = 0; i < doc.rows.size(); ++i) {
            for (std::size_t j = 0; j < doc.rows[i].size(); ++j) {
                const double a = doc.rows[i][j], b = back.rows[i][j];
                // 12 significant digits
                REQUIRE(std::abs(a - b) <= 1e-11 * std::max(std::abs(a), std::abs(b)));
            }
        }
        // writing the reread table is byte-stable
        CHECK(write_table(back) == write_table(read_table(write_table(back))));
    }
}

TEST_CASE("table header validation and parse errors") {
    static const std::vector<std::string> expect{"repeat_units", "gap_eV"};
    CHECK_THROWS_AS(read_table("wrong,header\n1,2\n", &expect), HeaderMismatch);
    CHECK_THROWS_WITH_AS(read_table("a,b\n1\n"), doctest::Contains("row 1"), ParseError);
    CHECK_THROWS_WITH_AS(read_table("a,b\n1,x\n"), doctest::Contains("not a number"), ParseError);
    CHECK_THROWS_AS(read_table(""), ParseError);

    const TableDocument empty_rows = read_table("a,b\n");
    CHECK(empty_rows.rows.empty());
    CHECK(empty_rows.header.size() == 2);
}

TEST_CASE("gap series loader") {
    const GapSeries series = gap_series_from_csv("repeat_units,gap_eV\n1,7.961\n2,7.393\n", "t");
    REQUIRE(series.observations.size() == 2);
    CHECK(series.observations[0].first == 1);
    CHECK(series.observations[1].second == doctest::Approx(7.393));
}

TEST_CASE("labeled table loader") {
    const LabeledTable t = read_labeled_table("method,a,b\nB3LYP,1.5,-2.5\nPBC-0-3,0.1,0.2\n");
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0].first == "B3LYP");
    CHECK(t.rows[1].second[1] == doctest::Approx(0.2));
}

TEST_CASE("spectrum format round trip") {
    const OrbitalSpectrum s{{-5.25, -1.0, 0.75, 2.0}, 2, "test"};
    const OrbitalSpectrum back = spectrum_from_csv(spectrum_to_csv(s), "test");
    CHECK(back.occupied_count == 2);
    REQUIRE(back.energies_ev.size() == 4);
    CHECK(back.energies_ev[0] == doctest::Approx(-5.25).epsilon(1e-12));
    CHECK_THROWS_AS(spectrum_from_csv("energy_eV\n-1.0\n", "no-directive"), ParseError);
}
