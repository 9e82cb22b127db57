#include "nanofet/volume.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "nanofet/constants.hpp"
#include "nanofet/errors.hpp"

namespace nanofet {

double vdw_radius_nm(Element e) {
    return e == Element::C ? constants::vdw_radius_c_nm : constants::vdw_radius_h_nm;
}

namespace {

struct Grid {
    Vec3 lo;
    double h = 0.0;
    std::int64_t nx = 0, ny = 0, nz = 0;

    double cx(std::int64_t i) const { return lo.x + (i + 0.5) * h; }
    double cy(std::int64_t j) const { return lo.y + (j + 0.5) * h; }
    double cz(std::int64_t k) const { return lo.z + (k + 0.5) * h; }
};

Grid make_grid(const MolecularStructure& s, double voxel) {
    Grid g;
    g.h = voxel;
    Vec3 lo = s.atoms.front().position_nm, hi = lo;
    double rmax = 0.0;
    for (const auto& a : s.atoms) {
        lo.x = std::min(lo.x, a.position_nm.x);
        lo.y = std::min(lo.y, a.position_nm.y);
        lo.z = std::min(lo.z, a.position_nm.z);
        hi.x = std::max(hi.x, a.position_nm.x);
        hi.y = std::max(hi.y, a.position_nm.y);
        hi.z = std::max(hi.z, a.position_nm.z);
        rmax = std::max(rmax, vdw_radius_nm(a.element));
    }
    const double pad = rmax + voxel;
    g.lo = {lo.x - pad, lo.y - pad, lo.z - pad};
    g.nx = static_cast<std::int64_t>((hi.x + pad - g.lo.x) / voxel) + 1;
    g.ny = static_cast<std::int64_t>((hi.y + pad - g.lo.y) / voxel) + 1;
    g.nz = static_cast<std::int64_t>((hi.z + pad - g.lo.z) / voxel) + 1;
    return g;
}

void validate_voxel(double voxel) {
    if (!(voxel > 0.005) || !(voxel <= 0.05))
        throw InvalidArgument("voxel must lie in (0.005, 0.05] nm, got " + std::to_string(voxel));
}

} // namespace

double vdw_volume_nm3(const MolecularStructure& s, double voxel_nm) {
    validate_voxel(voxel_nm);
    if (s.atoms.empty()) return 0.0;
    const Grid g = make_grid(s, voxel_nm);

    std::vector<std::int64_t> slice_counts(static_cast<std::size_t>(g.nz), 0);

#pragma omp parallel
    {
        std::vector<std::uint8_t> mask(static_cast<std::size_t>(g.nx * g.ny));
#pragma omp for schedule(static)
        for (std::int64_t k = 0; k < g.nz; ++k) {
            std::fill(mask.begin(), mask.end(), 0);
            const double z = g.cz(k);
            for (const auto& atom : s.atoms) {
                const double r = vdw_radius_nm(atom.element);
                const double dz = z - atom.position_nm.z;
                const double rr = r * r - dz * dz;
                if (rr <= 0.0) continue;
                const double span = std::sqrt(rr);
                const auto i0 = static_cast<std::int64_t>(
                    std::floor((atom.position_nm.x - span - g.lo.x) / g.h - 0.5));
                const auto i1 = static_cast<std::int64_t>(
                    std::ceil((atom.position_nm.x + span - g.lo.x) / g.h + 0.5));
                const auto j0 = static_cast<std::int64_t>(
                    std::floor((atom.position_nm.y - span - g.lo.y) / g.h - 0.5));
                const auto j1 = static_cast<std::int64_t>(
                    std::ceil((atom.position_nm.y + span - g.lo.y) / g.h + 0.5));
                for (std::int64_t i = std::max<std::int64_t>(i0, 0); i <= std::min(i1, g.nx - 1); ++i) {
                    const double dx = g.cx(i) - atom.position_nm.x;
                    for (std::int64_t j = std::max<std::int64_t>(j0, 0); j <= std::min(j1, g.ny - 1); ++j) {
                        const double dy = g.cy(j) - atom.position_nm.y;
                        // identical predicate to the reference path
                        if (dx * dx + dy * dy + dz * dz <= r * r)
                            mask[static_cast<std::size_t>(i * g.ny + j)] = 1;
                    }
                }
            }
            std::int64_t count = 0;
            for (std::uint8_t b : mask) count += b;
            slice_counts[static_cast<std::size_t>(k)] = count;
        }
    }

    std::int64_t total = 0;
    for (std::int64_t c : slice_counts) total += c;
    return static_cast<double>(total) * voxel_nm * voxel_nm * voxel_nm;
}

namespace reference {

double vdw_volume_nm3(const MolecularStructure& s, double voxel_nm) {
    validate_voxel(voxel_nm);
    if (s.atoms.empty()) return 0.0;
    const Grid g = make_grid(s, voxel_nm);

    std::int64_t total = 0;
    for (std::int64_t k = 0; k < g.nz; ++k) {
        const double z = g.cz(k);
        for (std::int64_t i = 0; i < g.nx; ++i) {
            const double x = g.cx(i);
            for (std::int64_t j = 0; j < g.ny; ++j) {
                const double y = g.cy(j);
                for (const auto& atom : s.atoms) {
                    const double r = vdw_radius_nm(atom.element);
                    const double dx = x - atom.position_nm.x;
                    const double dy = y - atom.position_nm.y;
                    const double dz = z - atom.position_nm.z;
                    if (dx * dx + dy * dy + dz * dz <= r * r) {
                        ++total;
                        break;
                    }
                }
            }
        }
    }
    return static_cast<double>(total) * voxel_nm * voxel_nm * voxel_nm;
}

} // namespace reference

} // namespace nanofet
