#ifndef NANOFET_PERFORMANCE_HPP
#define NANOFET_PERFORMANCE_HPP

#include <optional>

#include "nanofet/constants.hpp"

namespace nanofet {

/// Coaxial-cylinder capacitor. Radii and length in nm; SI conversion
/// happens inside capacitance_farads.
struct CapacitorGeometry {
    double inner_radius_nm = 0.0;
    double outer_radius_nm = 0.0;
    double length_nm = 0.0;
    double dielectric_constant = 1.0;

    CapacitorGeometry(double a_nm, double b_nm, double length_nm, double kappa);
};

/// C = 2 pi kappa eps0 L / ln(b/a)
double capacitance_farads(const CapacitorGeometry& g);

/// Gate-to-channel spacing, nucleus-to-nucleus and after subtracting the
/// vdW offset (the graphite sheet spacing is the conventional choice).
/// Throws NegativeGap when the adjusted gap closes to <= 0.
struct GapMetrics {
    double nuclear_gap_nm = 0.0;
    double adjusted_gap_nm = 0.0;
};
GapMetrics gap_metrics(double r_gate_nm, double r_inner_nm, double vdw_offset_nm);

/// V = gap * dielectric strength.
double breakdown_voltage_v(double gap_nm, double strength_v_per_nm);

/// Contact resistance: junction count times the resistance quantum.
struct ResistanceModel {
    int junction_count = 4;
    double quantum_resistance_ohm = constants::quantum_resistance_ohm;
};
double junction_resistance_ohm(const ResistanceModel& m);

/// Self-consistent switching state: Q = VC, tau = RC, f = 1/tau, I = Q/tau,
/// P = I^2 R, E = P tau. All derived on construction.
struct OperatingPoint {
    double voltage_v = 0.0;
    double capacitance_f = 0.0;
    double resistance_ohm = 0.0;
    double charge_c = 0.0;
    double time_constant_s = 0.0;
    double frequency_hz = 0.0;
    double current_a = 0.0;
    double power_w = 0.0;
    double energy_per_op_j = 0.0;
    double electron_count = 0.0;
};
OperatingPoint operating_point(double voltage_v, double capacitance_f, double resistance_ohm);

/// Current-limited slowdown: f and I scale as 1/s, P as 1/s^2, E per op as
/// 1/s; voltage and resistance stay fixed. Not a valid OperatingPoint
/// (f != 1/RC once s > 1), hence its own record.
struct ScaledPoint {
    double slowdown = 1.0;
    double voltage_v = 0.0;
    double resistance_ohm = 0.0;
    double frequency_hz = 0.0;
    double current_a = 0.0;
    double power_w = 0.0;
    double energy_per_op_j = 0.0;
};
ScaledPoint scale_operating_point(const OperatingPoint& op, double slowdown);

struct ScalingScenario {
    double slowdown = 1.0;
    double device_count = 1.0;
    double volume_per_device_nm3 = 1000.0;
};

/// kT bookkeeping at temperature T; below_limit is strict (E = kT ln2 is
/// not below).
struct LandauerCheck {
    double kt_j = 0.0;
    double kt_ln2_j = 0.0;
    double energy_per_op_j = 0.0;
    bool below_limit = false;
};
LandauerCheck landauer_check(double energy_per_op_j, double temperature_k);

/// Aggregate over `device_count` devices running the scaled point.
/// hiroshima_seconds (time to emit 6.3e13 J) is only reported above 1 W.
struct SystemReport {
    double total_power_w = 0.0;
    double total_ops_per_second = 0.0;
    double energy_per_op_j = 0.0;
    double total_volume_cm3 = 0.0;
    LandauerCheck landauer;
    std::optional<double> hiroshima_seconds;
};
SystemReport system_report(const ScalingScenario& scenario,
                           const OperatingPoint& base,
                           double temperature_k = 300.0);

} // namespace nanofet

#endif
