#include "nanofet/energetics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nanofet/errors.hpp"

namespace nanofet {

PerUnitEnergy per_unit_energy(const InteractionRow& row) {
    if (row.repeat_units < 1)
        throw InvalidArgument("repeat_units must be >= 1, got " + std::to_string(row.repeat_units));
    const double units = static_cast<double>(row.repeat_units);
    return {row.energy_uncorrected_ev / units, row.energy_dispersion_ev / units};
}

LineFit linear_trend(const std::vector<std::pair<double, double>>& points) {
    return ols_line(points);
}

void validate(const OrbitalSpectrum& s) {
    if (s.energies_ev.empty()) throw InvalidArgument("spectrum has no levels");
    if (s.occupied_count < 1 || s.occupied_count > static_cast<int>(s.energies_ev.size()))
        throw InvalidArgument("occupied_count " + std::to_string(s.occupied_count) +
                              " outside [1, " + std::to_string(s.energies_ev.size()) + "]");
    if (!std::is_sorted(s.energies_ev.begin(), s.energies_ev.end()))
        throw InvalidArgument("spectrum energies must be non-decreasing");
}

FrontierGap orbital_gap(const OrbitalSpectrum& s) {
    validate(s);
    if (s.occupied_count == static_cast<int>(s.energies_ev.size()))
        throw NoVirtuals("all " + std::to_string(s.occupied_count) + " levels are occupied");
    FrontierGap out;
    out.homo_ev = s.energies_ev[static_cast<std::size_t>(s.occupied_count) - 1];
    out.lumo_ev = s.energies_ev[static_cast<std::size_t>(s.occupied_count)];
    out.gap_ev = out.lumo_ev - out.homo_ev;
    return out;
}

LevelOffset component_offset(const ComponentLevels& a, const ComponentLevels& b) {
    return {a.homo_ev - b.homo_ev, a.lumo_ev - b.lumo_ev};
}

TunnelingRisk tunneling_risk(double offset_homo_ev, double threshold_ev) {
    if (threshold_ev < 0.0) throw InvalidArgument("threshold must be >= 0");
    TunnelingRisk out;
    out.flagged = offset_homo_ev < -threshold_ev;
    std::ostringstream msg;
    if (out.flagged) {
        msg << "channel HOMO lies " << -offset_homo_ev << " eV below the insulator HOMO "
            << "(threshold " << threshold_ev << " eV): insulator electrons would "
            << "preferentially transfer into a channel hole";
    } else {
        msg << "channel-insulator HOMO offset " << offset_homo_ev << " eV is within the "
            << threshold_ev << " eV threshold: no electron-donation risk flagged";
    }
    out.narrative = msg.str();
    return out;
}

DosGrid auto_dos_grid(const OrbitalSpectrum& s, double sigma_ev) {
    validate(s);
    return {s.energies_ev.front() - 6.0 * sigma_ev, s.energies_ev.back() + 6.0 * sigma_ev, 2001};
}

std::vector<std::pair<double, double>> dos_broadened(const OrbitalSpectrum& s,
                                                     double sigma_ev,
                                                     const DosGrid& grid) {
    validate(s);
    if (!(sigma_ev > 0.0)) throw InvalidArgument("sigma must be positive");
    if (grid.points < 2) throw InvalidArgument("grid needs at least 2 points");
    if (!(grid.max_ev > grid.min_ev)) throw InvalidArgument("grid window is empty");

    const double norm = 1.0 / (sigma_ev * std::sqrt(2.0 * std::numbers::pi));
    const double step = (grid.max_ev - grid.min_ev) / (grid.points - 1);

    std::vector<std::pair<double, double>> curve(static_cast<std::size_t>(grid.points));
    for (int i = 0; i < grid.points; ++i) {
        const double e = grid.min_ev + i * step;
        double dos = 0.0;
        for (double level : s.energies_ev) {
            const double u = (e - level) / sigma_ev;
            dos += norm * std::exp(-0.5 * u * u);
        }
        curve[static_cast<std::size_t>(i)] = {e, dos};
    }
    return curve;
}

} // namespace nanofet
