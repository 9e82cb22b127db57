#ifndef NANOFET_ELECTRONIC_HPP
#define NANOFET_ELECTRONIC_HPP

#include "nanofet/chirality.hpp"
#include "nanofet/constants.hpp"

namespace nanofet {

enum class Metallicity { Metallic, Semiconducting };

const char* to_string(Metallicity m);

/// Metallic iff (n - m) mod 3 == 0.
Metallicity classify_metallicity(const ChiralIndices& c);

/// Nearest-neighbor pi-band parameters for the zone-folded gap.
struct TightBindingParams {
    double hopping_ev = 2.7;
    double a_cc_nm = constants::graphene_cc_nm;
    int k_samples = 2048;
};

/// Analytic rule E_gap ~ 0.8 eV / D[nm] for semiconducting tubes.
double gap_estimate_ev(double diameter_nm);

/// gap_estimate composed with the metallicity classifier. Below 0.5 nm
/// diameter the analytic rule is known to break down; the caveat flag
/// records that, no curvature correction is attempted.
struct ChiralGap {
    double gap_ev = 0.0;
    Metallicity metallicity = Metallicity::Semiconducting;
    double diameter_nm = 0.0;
    bool small_diameter_caveat = false;
};
ChiralGap gap_for_chirality(const ChiralIndices& c);

/// Minimum of 2|E_graphene| over the tube's allowed quantization lines and
/// a sampled axial k, refined by golden-section search. Exactly zero (to
/// ~1e-11 eV) for metallic chiralities. Parallel over lines; the result is
/// independent of thread count.
double zone_folded_gap_ev(const ChiralIndices& c, const TightBindingParams& p = {});

namespace reference {
/// Serial brute force in cartesian reciprocal space: explicit K1/K2 line
/// vectors and the graphene dispersion from the three bond vectors. Slower
/// and deliberately on a different route than the phase-space kernel.
double zone_folded_gap_ev(const ChiralIndices& c, const TightBindingParams& p = {});
} // namespace reference

} // namespace nanofet

#endif
