#ifndef NANOFET_STRUCTURE_HPP
#define NANOFET_STRUCTURE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nanofet/vec3.hpp"

namespace nanofet {

enum class Element : std::uint8_t { C, H };

const char* element_symbol(Element e);
std::optional<Element> element_from_symbol(const std::string& symbol);

struct AtomSite {
    Element element = Element::C;
    Vec3 position_nm;
};

/// Immutable once built; the universal geometry currency. Positions in nm.
struct MolecularStructure {
    std::vector<AtomSite> atoms;
    std::string label;

    std::size_t size() const { return atoms.size(); }
    std::size_t count(Element e) const;
};

MolecularStructure translated(const MolecularStructure& s, const Vec3& shift);

/// Derived connectivity: C-C bonded below 0.18 nm, C-H below 0.13 nm,
/// H-H never. Neighbor lists are sorted; edges are (i<j) lexicographic.
struct BondGraph {
    std::vector<std::vector<int>> neighbors;
    std::vector<std::pair<int, int>> edges;
};

BondGraph bond_graph(const MolecularStructure& s);

/// Closest pair at or below `cutoff_nm`, if any. Used for the 0.08 nm
/// minimum-separation invariant and assembly clearance checks.
struct ClosePair {
    int a = -1;
    int b = -1;
    double distance_nm = 0.0;
};
std::optional<ClosePair> closest_pair_within(const MolecularStructure& s, double cutoff_nm);

/// Every unordered pair (a<b) at or below `cutoff_nm`, sorted by (a,b).
std::vector<ClosePair> pairs_within(const MolecularStructure& s, double cutoff_nm);

namespace reference {
/// O(N^2) serial pair scan, kept as the check against the cell-list kernel.
BondGraph bond_graph(const MolecularStructure& s);
} // namespace reference

} // namespace nanofet

#endif
