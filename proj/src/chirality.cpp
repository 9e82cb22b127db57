#include "nanofet/chirality.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <utility>

#include "nanofet/constants.hpp"
#include "nanofet/errors.hpp"

namespace nanofet {

ChiralIndices::ChiralIndices(int n_, int m_) : n(n_), m(m_) {
    if (n < 0 || m < 0)
        throw InvalidArgument("chiral indices must be non-negative, got (" +
                              std::to_string(n_) + "," + std::to_string(m_) + ")");
    if (n == 0 && m == 0)
        throw InvalidArgument("chiral indices (0,0) do not define a tube");
    if (m > n) std::swap(n, m);
}

std::string ChiralIndices::to_string() const {
    return "(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

int chiral_dr(const ChiralIndices& c) {
    return std::gcd(2 * c.n + c.m, 2 * c.m + c.n);
}

int hexagons_per_cell(const ChiralIndices& c) {
    return 2 * (c.n * c.n + c.n * c.m + c.m * c.m) / chiral_dr(c);
}

int atoms_per_cell(const ChiralIndices& c) {
    return 2 * hexagons_per_cell(c);
}

double cnt_diameter_nm(const ChiralIndices& c) {
    const double q = static_cast<double>(c.n * c.n + c.n * c.m + c.m * c.m);
    return constants::graphene_a_nm * std::sqrt(q) / std::numbers::pi;
}

double cnt_cell_length_nm(const ChiralIndices& c) {
    return std::numbers::pi * cnt_diameter_nm(c) * std::sqrt(3.0) / chiral_dr(c);
}

} // namespace nanofet
