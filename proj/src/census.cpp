#include "nanofet/census.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <vector>

namespace nanofet {

int BondCensus::undercoordinated_carbons() const {
    int n = 0;
    auto it = coordination.find(Element::C);
    if (it == coordination.end()) return 0;
    for (const auto& [deg, count] : it->second)
        if (deg < 4) n += count;
    return n;
}

namespace {

// Shortest cycle through edge (u,v): BFS from u to v with the edge removed.
// Returns the cycle's atom set, empty when none within the cap.
std::vector<int> shortest_cycle_through(const BondGraph& g, int u, int v, int max_len) {
    const int n = static_cast<int>(g.neighbors.size());
    std::vector<int> dist(n, -1), parent(n, -1);
    std::deque<int> queue;
    dist[u] = 0;
    queue.push_back(u);
    while (!queue.empty()) {
        const int cur = queue.front();
        queue.pop_front();
        if (dist[cur] + 1 > max_len - 1) break;
        for (int nb : g.neighbors[cur]) {
            if ((cur == u && nb == v) || (cur == v && nb == u)) continue;
            if (dist[nb] >= 0) continue;
            dist[nb] = dist[cur] + 1;
            parent[nb] = cur;
            if (nb == v) {
                std::vector<int> cycle;
                for (int a = v; a != -1; a = parent[a]) cycle.push_back(a);
                std::sort(cycle.begin(), cycle.end());
                return cycle;
            }
            queue.push_back(nb);
        }
    }
    return {};
}

} // namespace

BondCensus bond_census(const MolecularStructure& s, int max_ring_size) {
    BondCensus census;
    census.max_ring_size = max_ring_size;
    const BondGraph g = bond_graph(s);

    for (std::size_t i = 0; i < s.atoms.size(); ++i)
        census.coordination[s.atoms[i].element][static_cast<int>(g.neighbors[i].size())]++;

    std::set<std::vector<int>> seen;
    for (const auto& [u, v] : g.edges) {
        std::vector<int> cycle = shortest_cycle_through(g, u, v, max_ring_size);
        if (cycle.empty()) continue;
        const auto [it, inserted] = seen.insert(std::move(cycle));
        if (inserted) census.rings[static_cast<int>(it->size())]++;
    }
    return census;
}

} // namespace nanofet
