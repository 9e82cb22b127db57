#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nanofet/carve.hpp"
#include "nanofet/census.hpp"
#include "nanofet/constants.hpp"
#include "nanofet/errors.hpp"
#include "nanofet/lonsdaleite.hpp"
#include "nanofet/passivate.hpp"
#include "nanofet/structure.hpp"

using namespace nanofet;

namespace {

MolecularStructure carved_rod(double r_outer, int c_repeats, double length_fraction = 1.0) {
    const MolecularStructure block =
        build_lonsdaleite(LonsdaleiteSpec::with_defaults({3, 3, c_repeats}));
    Vec3 axis = centroid(block);
    axis.z = 0.0;
    const CarveSpec spec({0, 0, 1}, axis, 0.0, r_outer,
                         c_repeats * constants::lonsdaleite_c_nm * length_fraction);
    return carve_cylinder(block, spec);
}

} // namespace

TEST_CASE("a lone carbon becomes methane") {
    MolecularStructure atom;
    atom.atoms.push_back({Element::C, {0, 0, 0}});
    const MolecularStructure methane = passivate_hydrogen(atom);
    REQUIRE(methane.size() == 5);
    REQUIRE(methane.count(Element::H) == 4);
    for (std::size_t i = 1; i < 5; ++i) {
        CHECK(norm(methane.atoms[i].position_nm) == doctest::Approx(0.109).epsilon(1e-9));
        for (std::size_t j = i + 1; j < 5; ++j) {
            const double angle = std::acos(dot(normalized(methane.atoms[i].position_nm),
                                               normalized(methane.atoms[j].position_nm))) *
                                 180.0 / std::numbers::pi;
            CHECK(angle == doctest::Approx(109.47).epsilon(1.0 / 109.47));
        }
    }
}

TEST_CASE("fully coordinated carbons are left alone") {
    MolecularStructure atom;
    atom.atoms.push_back({Element::C, {0, 0, 0}});
    const MolecularStructure methane = passivate_hydrogen(atom);
    const MolecularStructure unchanged = passivate_hydrogen(methane);
    CHECK(unchanged.size() == methane.size());
}

TEST_CASE("input atoms are a prefix of the output") {
    const MolecularStructure rod = carved_rod(0.35, 3);
    const MolecularStructure out = passivate_hydrogen(rod);
    REQUIRE(out.size() >= rod.size());
    for (std::size_t i = 0; i < rod.size(); ++i) {
        CHECK(out.atoms[i].element == rod.atoms[i].element);
        CHECK(distance(out.atoms[i].position_nm, rod.atoms[i].position_nm) == 0.0);
    }
}

TEST_CASE("a carved rod reaches full coordination") {
    const MolecularStructure out = passivate_hydrogen(carved_rod(0.35, 3));
    const BondCensus census = bond_census(out);
    CHECK(census.undercoordinated_carbons() == 0);
    const auto& h_degrees = census.coordination.at(Element::H);
    REQUIRE(h_degrees.size() == 1);
    CHECK(h_degrees.count(1) == 1);
}

TEST_CASE("raw blocks passivate cleanly at several sizes") {
    for (const auto reps : {std::array<int, 3>{2, 2, 2}, std::array<int, 3>{3, 3, 3},
                            std::array<int, 3>{4, 3, 2}}) {
        const MolecularStructure block = build_lonsdaleite(LonsdaleiteSpec::with_defaults(reps));
        const MolecularStructure out = passivate_hydrogen(block);
        const BondCensus census = bond_census(out);
        REQUIRE(census.undercoordinated_carbons() == 0);

        // every C-H bond is the standard length; no hydrogen pair overlaps
        const BondGraph g = bond_graph(out);
        for (const auto& [i, j] : g.edges) {
            if (out.atoms[i].element == out.atoms[j].element) continue;
            CHECK(distance(out.atoms[i].position_nm, out.atoms[j].position_nm) ==
                  doctest::Approx(constants::ch_bond_length_nm).epsilon(1e-9));
        }
        for (const ClosePair& p : pairs_within(out, 0.15)) {
            const bool hh = out.atoms[p.a].element == Element::H &&
                            out.atoms[p.b].element == Element::H;
            CHECK(!hh);
        }
    }
}

TEST_CASE("an unphysical cut is rejected with StericClash") {
    // cutting mid-cell above the upper lateral layer leaves triply dangling
    // carbons whose cap hydrogens converge
    const MolecularStructure bad = carved_rod(0.45, 3, 0.90);
    CHECK_THROWS_AS(passivate_hydrogen(bad), StericClash);
}
