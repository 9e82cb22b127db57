#ifndef NANOFET_ENERGETICS_HPP
#define NANOFET_ENERGETICS_HPP

#include <string>
#include <utility>
#include <vector>

#include "nanofet/fitting.hpp"

namespace nanofet {

/// One row of a channel-insulator interaction table: total energies (eV)
/// for a stack of `repeat_units` insulator layers, with and without the
/// dispersion correction.
struct InteractionRow {
    int repeat_units = 1;
    double energy_uncorrected_ev = 0.0;
    double energy_dispersion_ev = 0.0;
};

struct PerUnitEnergy {
    double uncorrected_ev = 0.0;
    double dispersion_ev = 0.0;
};

PerUnitEnergy per_unit_energy(const InteractionRow& row);

/// OLS line through arbitrary (x, y) points; permutation-invariant.
LineFit linear_trend(const std::vector<std::pair<double, double>>& points);

/// Sorted orbital energies plus the occupation count.
struct OrbitalSpectrum {
    std::vector<double> energies_ev;
    int occupied_count = 0;
    std::string method_label;
};

void validate(const OrbitalSpectrum& s);

struct FrontierGap {
    double homo_ev = 0.0;
    double lumo_ev = 0.0;
    double gap_ev = 0.0;
};

/// HOMO/LUMO straddle the occupation boundary. Throws NoVirtuals when every
/// level is occupied.
FrontierGap orbital_gap(const OrbitalSpectrum& s);

struct ComponentLevels {
    double homo_ev = 0.0;
    double lumo_ev = 0.0;
    std::string label;
};

struct LevelOffset {
    double delta_homo_ev = 0.0;
    double delta_lumo_ev = 0.0;
};

/// (a.homo - b.homo, a.lumo - b.lumo)
LevelOffset component_offset(const ComponentLevels& a, const ComponentLevels& b);

/// Flags the electron-donation pathology: the channel HOMO lying below the
/// insulator HOMO by more than `threshold_ev` means insulator electrons
/// would preferentially fill channel holes.
struct TunnelingRisk {
    bool flagged = false;
    std::string narrative;
};

TunnelingRisk tunneling_risk(double offset_homo_ev, double threshold_ev = 0.1);

/// Sum of unit-area Gaussians of width sigma centered at each level,
/// sampled on a uniform grid. Returned as (energy_eV, dos) pairs.
struct DosGrid {
    double min_ev = 0.0;
    double max_ev = 0.0;
    int points = 2001;
};

/// Grid spanning all levels +- 6 sigma with 2001 points.
DosGrid auto_dos_grid(const OrbitalSpectrum& s, double sigma_ev);

std::vector<std::pair<double, double>> dos_broadened(const OrbitalSpectrum& s,
                                                     double sigma_ev,
                                                     const DosGrid& grid);

/// Labeled orbital-coupling magnitude ingested from published runs.
struct CouplingRecord {
    std::string system_label;
    double j_ab_eff_ev = 0.0;
};

} // namespace nanofet

#endif
