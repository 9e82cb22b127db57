#include "nanofet/passivate.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "nanofet/constants.hpp"
#include "nanofet/errors.hpp"

namespace nanofet {

namespace {

constexpr double kMinHHDistance = 0.15;
// cos/sin of the tetrahedral half-angle (109.4712 deg / 2)
const double kCosHalfTet = 1.0 / std::sqrt(3.0);
const double kSinHalfTet = std::sqrt(2.0 / 3.0);

Vec3 any_perpendicular(const Vec3& v) {
    const Vec3 ref = std::abs(v.x) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
    return normalized(cross(v, ref));
}

// Missing bond directions for a carbon with 0..3 existing bond unit vectors.
std::vector<Vec3> missing_directions(const std::vector<Vec3>& bonds) {
    switch (bonds.size()) {
    case 0: {
        const double s = 1.0 / std::sqrt(3.0);
        return {{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
    }
    case 1: {
        // Tripod opposite the single bond: each new direction makes the
        // tetrahedral angle with it.
        const Vec3 axis = -bonds[0];
        const Vec3 p = any_perpendicular(axis);
        const Vec3 q = cross(axis, p);
        const double ca = 1.0 / 3.0;
        const double sa = std::sqrt(8.0) / 3.0;
        std::vector<Vec3> dirs;
        for (int k = 0; k < 3; ++k) {
            const double phi = 2.0 * std::numbers::pi * k / 3.0;
            dirs.push_back(normalized(axis * ca + (p * std::cos(phi) + q * std::sin(phi)) * sa));
        }
        return dirs;
    }
    case 2: {
        const Vec3 bisector = -normalized(bonds[0] + bonds[1]);
        Vec3 p = cross(bonds[0], bonds[1]);
        const double pn = norm(p);
        // Collinear existing bonds leave the perpendicular plane free.
        p = pn > 1e-9 ? p * (1.0 / pn) : any_perpendicular(bonds[0]);
        return {normalized(bisector * kCosHalfTet + p * kSinHalfTet),
                normalized(bisector * kCosHalfTet - p * kSinHalfTet)};
    }
    case 3:
        return {-normalized(bonds[0] + bonds[1] + bonds[2])};
    default:
        return {};
    }
}

} // namespace

MolecularStructure passivate_hydrogen(const MolecularStructure& s) {
    const BondGraph g = bond_graph(s);

    MolecularStructure out = s;
    if (!out.label.empty()) out.label += ":passivated";

    std::vector<Vec3> added;
    for (int i = 0; i < static_cast<int>(s.atoms.size()); ++i) {
        if (s.atoms[i].element != Element::C) continue;
        const int degree = static_cast<int>(g.neighbors[i].size());
        if (degree >= 4) continue;

        std::vector<Vec3> bonds;
        bonds.reserve(degree);
        for (int j : g.neighbors[i])
            bonds.push_back(normalized(s.atoms[j].position_nm - s.atoms[i].position_nm));

        for (const Vec3& dir : missing_directions(bonds)) {
            const Vec3 pos = s.atoms[i].position_nm + dir * constants::ch_bond_length_nm;
            out.atoms.push_back({Element::H, pos});
            added.push_back(pos);
        }
    }

    if (added.empty()) return out;

    // A fresh hydrogen too close to another hydrogen, or within bonding
    // range of a carbon it was not placed on, signals an unphysical surface.
    const std::size_t n_in = s.atoms.size();
    for (const ClosePair& p : pairs_within(out, kMinHHDistance)) {
        const bool any_new = p.a >= static_cast<int>(n_in) || p.b >= static_cast<int>(n_in);
        const bool hh = out.atoms[p.a].element == Element::H &&
                        out.atoms[p.b].element == Element::H;
        if (any_new && hh)
            throw StericClash("passivation hydrogens " + std::to_string(p.a) + " and " +
                              std::to_string(p.b) + " would sit " +
                              std::to_string(p.distance_nm) + " nm apart");
    }

    const BondGraph g2 = bond_graph(out);
    for (std::size_t i = n_in; i < out.atoms.size(); ++i) {
        if (g2.neighbors[i].size() != 1)
            throw StericClash("placed hydrogen " + std::to_string(i) +
                              " bonds to " + std::to_string(g2.neighbors[i].size()) +
                              " atoms; carve surface is unphysical");
    }
    for (std::size_t i = 0; i < out.atoms.size(); ++i) {
        if (out.atoms[i].element == Element::C && g2.neighbors[i].size() != 4)
            throw StericClash("carbon " + std::to_string(i) + " has coordination " +
                              std::to_string(g2.neighbors[i].size()) + " after passivation");
    }
    return out;
}

} // namespace nanofet
