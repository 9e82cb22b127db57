#ifndef NANOFET_ASSEMBLY_HPP
#define NANOFET_ASSEMBLY_HPP

#include "nanofet/carve.hpp"
#include "nanofet/chirality.hpp"
#include "nanofet/structure.hpp"

namespace nanofet {

/// Coaxial device recipe. Everything shares the z axis through the origin;
/// the channel rod spans [0, channel_repeats * c]. The insulator CarveSpec
/// must be axial (axis = +-z, origin on the axis); its origin.z places the
/// annulus. A zero length (or zero repeats) omits that component; leads
/// require a channel to attach to. Lead and gate chiralities must classify
/// as metallic.
struct DeviceSpec {
    ChiralIndices lead_chirality;
    ChiralIndices gate_chirality;
    int channel_repeats = 0;
    CarveSpec insulator;
    double lead_length_nm = 0.0;
    double gate_length_nm = 0.0;
};

/// The named parts, each already passivated/positioned in device coordinates.
struct DeviceComponents {
    MolecularStructure channel;
    MolecularStructure lead_source;
    MolecularStructure lead_drain;
    MolecularStructure insulator;
    MolecularStructure gate;
    double channel_length_nm = 0.0;
};

DeviceComponents assemble_components(const DeviceSpec& spec);

/// Concatenation of all parts (channel, leads, insulator, gate) with a
/// clearance check: outside the declared junction zones at the channel
/// ends, atoms of different components closer than 0.15 nm raise
/// ComponentOverlap. No covalent stitching is performed.
MolecularStructure assemble_device(const DeviceSpec& spec);

/// The reference mFET recipe: (4,4) leads, (20,20) gate, hexagonal-diamond
/// channel rod and annular insulator.
DeviceSpec paper_like_device();

/// Channel rod + both leads only (the sub-assembly used for lead-fit checks).
DeviceSpec paper_like_channel_with_leads();

} // namespace nanofet

#endif
