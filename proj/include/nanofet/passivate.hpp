#ifndef NANOFET_PASSIVATE_HPP
#define NANOFET_PASSIVATE_HPP

#include "nanofet/structure.hpp"

namespace nanofet {

/// Caps every undercoordinated carbon with hydrogens at 0.109 nm along the
/// missing tetrahedral directions. Input atoms are never moved or removed
/// (the input is a prefix of the output). Throws StericClash when two
/// required hydrogens would come closer than 0.15 nm, or when a placed
/// hydrogen lands within bonding distance of a foreign carbon -- both mean
/// the carved surface is unphysical.
MolecularStructure passivate_hydrogen(const MolecularStructure& s);

} // namespace nanofet

#endif
