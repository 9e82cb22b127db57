#ifndef NANOFET_CARVE_HPP
#define NANOFET_CARVE_HPP

#include "nanofet/structure.hpp"

namespace nanofet {

/// Cylindrical/annular selection region. Atoms are kept when their radial
/// distance from the axis lies in [r_inner, r_outer] and their axial
/// coordinate (measured from origin along axis) lies in [0, length].
struct CarveSpec {
    Vec3 axis{0.0, 0.0, 1.0};
    Vec3 origin;
    double r_inner_nm = 0.0;
    double r_outer_nm = 0.0;
    double length_nm = 0.0;

    CarveSpec(Vec3 axis_, Vec3 origin_, double r_inner, double r_outer, double length);
};

/// Keeps exactly the atoms inside the carve region; the result may contain
/// undercoordinated carbons (passivation is a separate step). An empty
/// result is returned, not an error.
MolecularStructure carve_cylinder(const MolecularStructure& s, const CarveSpec& spec);

} // namespace nanofet

#endif
