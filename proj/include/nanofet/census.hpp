#ifndef NANOFET_CENSUS_HPP
#define NANOFET_CENSUS_HPP

#include <map>

#include "nanofet/structure.hpp"

namespace nanofet {

struct BondCensus {
    // element -> (coordination number -> atom count)
    std::map<Element, std::map<int, int>> coordination;
    // smallest-ring size -> number of distinct rings of that size
    std::map<int, int> rings;
    int max_ring_size = 0;  // search cap used

    int undercoordinated_carbons() const;
};

/// Coordination histogram plus a smallest-ring census: for every edge the
/// shortest cycle through it is found by BFS (capped at max_ring_size) and
/// distinct cycles are counted by size.
BondCensus bond_census(const MolecularStructure& s, int max_ring_size = 12);

} // namespace nanofet

#endif
