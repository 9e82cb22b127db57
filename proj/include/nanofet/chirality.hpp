#ifndef NANOFET_CHIRALITY_HPP
#define NANOFET_CHIRALITY_HPP

#include <string>

namespace nanofet {

/// CNT chirality (n,m). Normalized to n >= m on construction; (0,0) rejected.
struct ChiralIndices {
    int n = 0;
    int m = 0;

    ChiralIndices(int n_, int m_);
    std::string to_string() const;
};

/// gcd(2n+m, 2m+n); divides the translation vector and the cell atom count.
int chiral_dr(const ChiralIndices& c);

/// Graphene hexagons per tube unit cell, N = 2(n^2+nm+m^2)/d_R.
int hexagons_per_cell(const ChiralIndices& c);

/// Atoms per tube unit cell, 2N.
int atoms_per_cell(const ChiralIndices& c);

/// D = a_g * sqrt(n^2+nm+m^2) / pi, a_g = 0.246 nm.
double cnt_diameter_nm(const ChiralIndices& c);

/// Axial period |T| = sqrt(3) * pi * D / d_R.
double cnt_cell_length_nm(const ChiralIndices& c);

} // namespace nanofet

#endif
