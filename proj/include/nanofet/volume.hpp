#ifndef NANOFET_VOLUME_HPP
#define NANOFET_VOLUME_HPP

#include "nanofet/structure.hpp"

namespace nanofet {

double vdw_radius_nm(Element e);

/// Volume of the union of van der Waals spheres (r_C = 0.17 nm,
/// r_H = 0.12 nm) by voxel-center counting. voxel must lie in
/// (0.005, 0.05] nm. Parallelized over z slices; the count is exact and
/// independent of thread count.
double vdw_volume_nm3(const MolecularStructure& s, double voxel_nm);

namespace reference {
/// Serial brute force: every voxel center tested against every sphere.
/// Same inclusion predicate as the kernel, so counts match bit for bit.
double vdw_volume_nm3(const MolecularStructure& s, double voxel_nm);
} // namespace reference

} // namespace nanofet

#endif
