#include "nanofet/structure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "nanofet/constants.hpp"

namespace nanofet {

const char* element_symbol(Element e) {
    return e == Element::C ? "C" : "H";
}

std::optional<Element> element_from_symbol(const std::string& symbol) {
    if (symbol == "C") return Element::C;
    if (symbol == "H") return Element::H;
    return std::nullopt;
}

std::size_t MolecularStructure::count(Element e) const {
    std::size_t n = 0;
    for (const auto& a : atoms)
        if (a.element == e) ++n;
    return n;
}

MolecularStructure translated(const MolecularStructure& s, const Vec3& shift) {
    MolecularStructure out = s;
    for (auto& a : out.atoms) a.position_nm += shift;
    return out;
}

namespace {

double pair_cutoff(Element a, Element b) {
    if (a == Element::C && b == Element::C) return constants::cc_bond_cutoff_nm;
    if (a == Element::H && b == Element::H) return 0.0;
    return constants::ch_bond_cutoff_nm;
}

// Uniform grid over the bounding box; cell edge >= cutoff so only the
// 27-cell neighborhood needs scanning.
struct CellIndex {
    Vec3 origin;
    double cell = 0.18;
    int nx = 1, ny = 1, nz = 1;
    std::unordered_map<std::int64_t, std::vector<int>> cells;

    CellIndex(const MolecularStructure& s, double cell_edge) : cell(cell_edge) {
        if (s.atoms.empty()) return;
        Vec3 lo = s.atoms.front().position_nm;
        Vec3 hi = lo;
        for (const auto& a : s.atoms) {
            lo.x = std::min(lo.x, a.position_nm.x);
            lo.y = std::min(lo.y, a.position_nm.y);
            lo.z = std::min(lo.z, a.position_nm.z);
            hi.x = std::max(hi.x, a.position_nm.x);
            hi.y = std::max(hi.y, a.position_nm.y);
            hi.z = std::max(hi.z, a.position_nm.z);
        }
        origin = lo;
        nx = static_cast<int>((hi.x - lo.x) / cell) + 1;
        ny = static_cast<int>((hi.y - lo.y) / cell) + 1;
        nz = static_cast<int>((hi.z - lo.z) / cell) + 1;
        for (int i = 0; i < static_cast<int>(s.atoms.size()); ++i)
            cells[key_of(s.atoms[i].position_nm)].push_back(i);
    }

    // indices are padded by one so the +-1 neighborhood never aliases
    std::int64_t key(int ix, int iy, int iz) const {
        return (static_cast<std::int64_t>(ix + 1) * (ny + 2) + (iy + 1)) * (nz + 2) + (iz + 1);
    }
    std::int64_t key_of(const Vec3& p) const {
        const int ix = static_cast<int>((p.x - origin.x) / cell);
        const int iy = static_cast<int>((p.y - origin.y) / cell);
        const int iz = static_cast<int>((p.z - origin.z) / cell);
        return key(ix, iy, iz);
    }

    template <typename F>
    void for_neighborhood(const Vec3& p, F&& f) const {
        const int ix = static_cast<int>((p.x - origin.x) / cell);
        const int iy = static_cast<int>((p.y - origin.y) / cell);
        const int iz = static_cast<int>((p.z - origin.z) / cell);
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy)
                for (int dz = -1; dz <= 1; ++dz) {
                    auto it = cells.find(key(ix + dx, iy + dy, iz + dz));
                    if (it == cells.end()) continue;
                    for (int j : it->second) f(j);
                }
    }
};

} // namespace

BondGraph bond_graph(const MolecularStructure& s) {
    const int n = static_cast<int>(s.atoms.size());
    BondGraph g;
    g.neighbors.assign(n, {});
    if (n == 0) return g;

    const CellIndex index(s, constants::cc_bond_cutoff_nm);

    // Each atom's list is built independently from the shared index, so the
    // result does not depend on thread count.
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        const auto& ai = s.atoms[i];
        std::vector<int>& nbrs = g.neighbors[i];
        index.for_neighborhood(ai.position_nm, [&](int j) {
            if (j == i) return;
            const auto& aj = s.atoms[j];
            const double cutoff = pair_cutoff(ai.element, aj.element);
            if (cutoff <= 0.0) return;
            if (norm2(ai.position_nm - aj.position_nm) < cutoff * cutoff)
                nbrs.push_back(j);
        });
        std::sort(nbrs.begin(), nbrs.end());
    }

    for (int i = 0; i < n; ++i)
        for (int j : g.neighbors[i])
            if (i < j) g.edges.emplace_back(i, j);
    return g;
}

std::optional<ClosePair> closest_pair_within(const MolecularStructure& s, double cutoff_nm) {
    ClosePair best;
    best.distance_nm = std::numeric_limits<double>::infinity();
    for (const ClosePair& p : pairs_within(s, cutoff_nm))
        if (p.distance_nm < best.distance_nm) best = p;
    if (best.a < 0) return std::nullopt;
    return best;
}

std::vector<ClosePair> pairs_within(const MolecularStructure& s, double cutoff_nm) {
    std::vector<ClosePair> out;
    const int n = static_cast<int>(s.atoms.size());
    if (n < 2) return out;
    const CellIndex index(s, cutoff_nm);
    for (int i = 0; i < n; ++i) {
        index.for_neighborhood(s.atoms[i].position_nm, [&](int j) {
            if (j <= i) return;
            const double d = distance(s.atoms[i].position_nm, s.atoms[j].position_nm);
            if (d <= cutoff_nm) out.push_back({i, j, d});
        });
    }
    std::sort(out.begin(), out.end(), [](const ClosePair& a, const ClosePair& b) {
        return a.a != b.a ? a.a < b.a : a.b < b.b;
    });
    return out;
}

namespace reference {

BondGraph bond_graph(const MolecularStructure& s) {
    const int n = static_cast<int>(s.atoms.size());
    BondGraph g;
    g.neighbors.assign(n, {});
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double cutoff = pair_cutoff(s.atoms[i].element, s.atoms[j].element);
            if (cutoff <= 0.0) continue;
            if (norm2(s.atoms[i].position_nm - s.atoms[j].position_nm) < cutoff * cutoff) {
                g.neighbors[i].push_back(j);
                g.neighbors[j].push_back(i);
            }
        }
    }
    for (auto& nbrs : g.neighbors) std::sort(nbrs.begin(), nbrs.end());
    for (int i = 0; i < n; ++i)
        for (int j : g.neighbors[i])
            if (i < j) g.edges.emplace_back(i, j);
    return g;
}

} // namespace reference

} // namespace nanofet
