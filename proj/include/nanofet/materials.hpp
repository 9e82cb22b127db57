#ifndef NANOFET_MATERIALS_HPP
#define NANOFET_MATERIALS_HPP

#include "nanofet/errors.hpp"

namespace nanofet {

/// Bulk electronic character of a channel/lead material, in eV.
/// electron_affinity_ev follows the "conduction band minimum minus vacuum
/// level" sign convention: a POSITIVE value means the CBM sits above
/// vacuum, i.e. the material has negative electron affinity (NEA).
struct MaterialProperties {
    double work_function_ev = 0.0;
    double electron_affinity_ev = 0.0;
    double bandgap_ev = 0.0;

    bool negative_electron_affinity() const { return electron_affinity_ev > 0.0; }
};

/// Hexagonal-diamond channel values used throughout: work function 5.8 eV,
/// CBM 0.67 eV above vacuum, extrapolated gap 6.4 eV.
inline MaterialProperties lonsdaleite_channel() { return {5.8, 0.67, 6.4}; }

/// Source-gate bias that starts hole injection: the difference between the
/// channel and lead work functions, in volts.
inline double injection_bias_v(const MaterialProperties& channel, double lead_work_function_ev) {
    if (!(channel.work_function_ev > 0.0) || !(lead_work_function_ev > 0.0))
        throw InvalidArgument("work functions must be positive");
    return channel.work_function_ev - lead_work_function_ev;
}

} // namespace nanofet

#endif
