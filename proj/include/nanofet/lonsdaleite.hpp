#ifndef NANOFET_LONSDALEITE_HPP
#define NANOFET_LONSDALEITE_HPP

#include <array>

#include "nanofet/structure.hpp"

namespace nanofet {

/// Hexagonal-diamond supercell description. a, c in nm; repeats along the
/// two basal axes and the c axis.
struct LonsdaleiteSpec {
    double a_nm;
    double c_nm;
    std::array<int, 3> repeats{1, 1, 1};

    LonsdaleiteSpec(double a, double c, std::array<int, 3> reps);
    static LonsdaleiteSpec with_defaults(std::array<int, 3> reps);
};

/// 4-atom wurtzite-type carbon basis, c axis along +z. Atom count is
/// 4 * repeats[0] * repeats[1] * repeats[2]; nearest-neighbor C-C distance
/// comes out at 0.1544 nm for the default cell.
MolecularStructure build_lonsdaleite(const LonsdaleiteSpec& spec);

/// Geometric center of the structure's atom positions.
Vec3 centroid(const MolecularStructure& s);

} // namespace nanofet

#endif
