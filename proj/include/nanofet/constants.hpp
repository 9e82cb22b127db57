#ifndef NANOFET_CONSTANTS_HPP
#define NANOFET_CONSTANTS_HPP

namespace nanofet::constants {

// --- physics (SI) ---
inline constexpr double eps0_f_per_m         = 8.85e-12;       // vacuum permittivity
inline constexpr double elementary_charge_c  = 1.602e-19;
inline constexpr double boltzmann_j_per_k    = 1.380649e-23;
inline constexpr double quantum_resistance_ohm = 25813.0;      // h/e^2, per-junction scale
inline constexpr double hiroshima_j          = 6.3e13;         // Little Boy yield, report metric

// --- graphene / CNT lattice (nm) ---
inline constexpr double graphene_a_nm  = 0.246;                // hexagonal lattice constant
inline constexpr double graphene_cc_nm = graphene_a_nm / 1.7320508075688772; // a / sqrt(3)

// --- Lonsdaleite (hexagonal diamond), literature cell (nm) ---
inline constexpr double lonsdaleite_a_nm = 0.2522;
inline constexpr double lonsdaleite_c_nm = 0.4119;
inline constexpr double lonsdaleite_z    = 0.0625;             // internal basis parameter

// --- bonding / van der Waals (nm) ---
inline constexpr double cc_bond_cutoff_nm = 0.18;  // midway between bonded and next shell
inline constexpr double ch_bond_cutoff_nm = 0.13;
inline constexpr double ch_bond_length_nm = 0.109;
inline constexpr double vdw_radius_c_nm   = 0.17;
inline constexpr double vdw_radius_h_nm   = 0.12;
inline constexpr double graphite_layer_gap_nm = 0.34;          // sheet-to-sheet vdW spacing

// --- dielectrics ---
inline constexpr double diamond_kappa            = 5.7;
inline constexpr double diamond_strength_v_per_nm = 1.0;       // CVD value; 3 V/nm claimed experimentally

} // namespace nanofet::constants

#endif
