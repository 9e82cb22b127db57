#include "nanofet/cnt.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "nanofet/constants.hpp"
#include "nanofet/errors.hpp"

namespace nanofet {

// The tube cell is the parallelogram spanned by the chiral vector
// Ch = n a1 + m a2 and the translation vector T = t1 a1 + t2 a2,
// t1 = (2m+n)/d_R, t2 = -(2n+m)/d_R. Selecting lattice sites is done in
// exact integer arithmetic: with u = 3i+delta, v = 3j+delta (delta = 0,1 for
// the two basis atoms), the fractional coordinates along Ch and T are
//   s = [u(2n+m) + v(2m+n)] / 6q      (q = n^2+nm+m^2)
//   t = d_R (m u - n v)   / 6q
// and a site belongs to the cell iff 0 <= s < 1 and 0 <= t < 1. This keeps
// the seam exact: no duplicate or missing atoms regardless of chirality.
MolecularStructure build_cnt(const ChiralIndices& c, int unit_cells) {
    if (unit_cells < 1)
        throw InvalidArgument("unit_cells must be >= 1, got " + std::to_string(unit_cells));

    const std::int64_t n = c.n, m = c.m;
    const std::int64_t q = n * n + n * m + m * m;
    const std::int64_t dr = chiral_dr(c);
    const std::int64_t t1 = (2 * m + n) / dr;
    const std::int64_t t2 = -(2 * n + m) / dr;
    const std::int64_t den = 6 * q;

    const double radius = 0.5 * cnt_diameter_nm(c);
    const double period = cnt_cell_length_nm(c);

    // Enumeration window: the (i,j) bounding box of the cell corners, padded.
    const std::int64_t corner_i[4] = {0, n, t1, n + t1};
    const std::int64_t corner_j[4] = {0, m, t2, m + t2};
    const auto [imin, imax] = std::minmax_element(corner_i, corner_i + 4);
    const auto [jmin, jmax] = std::minmax_element(corner_j, corner_j + 4);

    struct Site {
        std::int64_t s_num;
        std::int64_t t_num;
    };
    std::vector<Site> sites;
    sites.reserve(static_cast<std::size_t>(atoms_per_cell(c)));

    for (std::int64_t i = *imin - 1; i <= *imax + 1; ++i) {
        for (std::int64_t j = *jmin - 1; j <= *jmax + 1; ++j) {
            for (std::int64_t delta = 0; delta <= 1; ++delta) {
                const std::int64_t u = 3 * i + delta;
                const std::int64_t v = 3 * j + delta;
                const std::int64_t s_num = u * (2 * n + m) + v * (2 * m + n);
                const std::int64_t t_num = dr * (m * u - n * v);
                if (s_num < 0 || s_num >= den) continue;
                if (t_num < 0 || t_num >= den) continue;
                sites.push_back({s_num, t_num});
            }
        }
    }

    // Deterministic ordering: axial position first, then angle.
    std::sort(sites.begin(), sites.end(), [](const Site& a, const Site& b) {
        if (a.t_num != b.t_num) return a.t_num < b.t_num;
        return a.s_num < b.s_num;
    });

    MolecularStructure out;
    out.label = "cnt" + c.to_string();
    out.atoms.reserve(sites.size() * static_cast<std::size_t>(unit_cells));
    for (int cell = 0; cell < unit_cells; ++cell) {
        const double z0 = cell * period;
        for (const Site& site : sites) {
            const double theta = 2.0 * std::numbers::pi * static_cast<double>(site.s_num) / static_cast<double>(den);
            const double z = period * static_cast<double>(site.t_num) / static_cast<double>(den);
            out.atoms.push_back({Element::C,
                                 {radius * std::cos(theta), radius * std::sin(theta), z0 + z}});
        }
    }
    return out;
}

} // namespace nanofet
