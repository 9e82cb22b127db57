#include "nanofet/lonsdaleite.hpp"

#include <cmath>
#include <string>

#include "nanofet/constants.hpp"
#include "nanofet/errors.hpp"

namespace nanofet {

LonsdaleiteSpec::LonsdaleiteSpec(double a, double c, std::array<int, 3> reps)
    : a_nm(a), c_nm(c), repeats(reps) {
    if (!(a_nm > 0.0) || !(c_nm > 0.0))
        throw InvalidArgument("lattice constants must be positive");
    for (int r : repeats)
        if (r < 1) throw InvalidArgument("repeats must be >= 1");
}

LonsdaleiteSpec LonsdaleiteSpec::with_defaults(std::array<int, 3> reps) {
    return LonsdaleiteSpec(constants::lonsdaleite_a_nm, constants::lonsdaleite_c_nm, reps);
}

MolecularStructure build_lonsdaleite(const LonsdaleiteSpec& spec) {
    const double a = spec.a_nm;
    const double c = spec.c_nm;
    const double z = constants::lonsdaleite_z;

    // Hexagonal cell vectors; c axis along z.
    const Vec3 a1{a, 0.0, 0.0};
    const Vec3 a2{-0.5 * a, 0.5 * std::sqrt(3.0) * a, 0.0};
    const Vec3 a3{0.0, 0.0, c};

    // P6_3/mmc 4f sites at internal parameter z, origin shifted so the cell
    // boundary falls inside the axial-bond gap: a block then terminates on
    // both (0001) faces with single straight dangling bonds (one per
    // column) instead of sparse triply-dangling layers.
    const double f = 1.0 / 3.0;
    const double frac[4][3] = {
        {f, 2 * f, 5.0 / 16.0 - z},
        {f, 2 * f, 9.0 / 16.0 + z},
        {2 * f, f, 3.0 / 16.0 - z},
        {2 * f, f, 11.0 / 16.0 + z},
    };

    MolecularStructure out;
    out.label = "lonsdaleite";
    out.atoms.reserve(static_cast<std::size_t>(4) * spec.repeats[0] * spec.repeats[1] * spec.repeats[2]);
    for (int i = 0; i < spec.repeats[0]; ++i)
        for (int j = 0; j < spec.repeats[1]; ++j)
            for (int k = 0; k < spec.repeats[2]; ++k)
                for (const auto& b : frac) {
                    const Vec3 p = a1 * (i + b[0]) + a2 * (j + b[1]) + a3 * (k + b[2]);
                    out.atoms.push_back({Element::C, p});
                }
    return out;
}

Vec3 centroid(const MolecularStructure& s) {
    Vec3 sum;
    if (s.atoms.empty()) return sum;
    for (const auto& a : s.atoms) sum += a.position_nm;
    return sum * (1.0 / static_cast<double>(s.atoms.size()));
}

} // namespace nanofet
