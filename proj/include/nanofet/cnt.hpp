#ifndef NANOFET_CNT_HPP
#define NANOFET_CNT_HPP

#include "nanofet/chirality.hpp"
#include "nanofet/structure.hpp"

namespace nanofet {

/// Rolls the graphene lattice into an ideal (unrelaxed) tube along +z,
/// starting at z = 0. Atom count per cell is 4(n^2+nm+m^2)/d_R and every
/// atom sits exactly on the cylinder of radius cnt_diameter/2.
MolecularStructure build_cnt(const ChiralIndices& c, int unit_cells);

} // namespace nanofet

#endif
