#include "nanofet/carve.hpp"

#include <cmath>

#include "nanofet/errors.hpp"

namespace nanofet {

CarveSpec::CarveSpec(Vec3 axis_, Vec3 origin_, double r_inner, double r_outer, double length)
    : axis(axis_), origin(origin_), r_inner_nm(r_inner), r_outer_nm(r_outer), length_nm(length) {
    const double n = norm(axis);
    if (!(n > 0.0)) throw InvalidArgument("carve axis must be a nonzero vector");
    axis = axis * (1.0 / n);
    if (r_inner_nm < 0.0) throw InvalidArgument("r_inner must be >= 0");
    if (!(r_outer_nm > r_inner_nm)) throw InvalidArgument("r_outer must exceed r_inner");
    if (!(length_nm > 0.0)) throw InvalidArgument("carve length must be positive");
}

MolecularStructure carve_cylinder(const MolecularStructure& s, const CarveSpec& spec) {
    MolecularStructure out;
    out.label = s.label.empty() ? "carved" : s.label + ":carved";
    for (const auto& atom : s.atoms) {
        const Vec3 rel = atom.position_nm - spec.origin;
        const double ax = dot(rel, spec.axis);
        if (ax < 0.0 || ax > spec.length_nm) continue;
        const Vec3 radial = rel - spec.axis * ax;
        const double r = norm(radial);
        if (r < spec.r_inner_nm || r > spec.r_outer_nm) continue;
        out.atoms.push_back(atom);
    }
    return out;
}

} // namespace nanofet
