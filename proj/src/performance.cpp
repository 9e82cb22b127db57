#include "nanofet/performance.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "nanofet/errors.hpp"

namespace nanofet {

CapacitorGeometry::CapacitorGeometry(double a_nm, double b_nm, double length, double kappa)
    : inner_radius_nm(a_nm), outer_radius_nm(b_nm), length_nm(length), dielectric_constant(kappa) {
    if (!(inner_radius_nm > 0.0)) throw InvalidArgument("inner radius must be positive");
    if (!(outer_radius_nm > inner_radius_nm))
        throw InvalidArgument("outer radius must exceed inner radius");
    if (!(length_nm > 0.0)) throw InvalidArgument("length must be positive");
    if (!(dielectric_constant >= 1.0)) throw InvalidArgument("dielectric constant must be >= 1");
}

double capacitance_farads(const CapacitorGeometry& g) {
    const double length_m = g.length_nm * 1e-9;
    return 2.0 * std::numbers::pi * g.dielectric_constant * constants::eps0_f_per_m * length_m /
           std::log(g.outer_radius_nm / g.inner_radius_nm);
}

GapMetrics gap_metrics(double r_gate_nm, double r_inner_nm, double vdw_offset_nm) {
    if (!(r_gate_nm > r_inner_nm)) throw InvalidArgument("gate radius must exceed inner radius");
    if (vdw_offset_nm < 0.0) throw InvalidArgument("vdW offset must be >= 0");
    GapMetrics out;
    out.nuclear_gap_nm = r_gate_nm - r_inner_nm;
    out.adjusted_gap_nm = out.nuclear_gap_nm - vdw_offset_nm;
    if (out.adjusted_gap_nm <= 0.0)
        throw NegativeGap("vdW-adjusted gap " + std::to_string(out.adjusted_gap_nm) +
                          " nm is not positive");
    return out;
}

double breakdown_voltage_v(double gap_nm, double strength_v_per_nm) {
    if (!(gap_nm > 0.0)) throw InvalidArgument("gap must be positive");
    if (!(strength_v_per_nm > 0.0)) throw InvalidArgument("dielectric strength must be positive");
    return gap_nm * strength_v_per_nm;
}

double junction_resistance_ohm(const ResistanceModel& m) {
    if (m.junction_count < 0) throw InvalidArgument("junction count must be >= 0");
    if (!(m.quantum_resistance_ohm > 0.0))
        throw InvalidArgument("quantum resistance must be positive");
    return m.junction_count * m.quantum_resistance_ohm;
}

OperatingPoint operating_point(double voltage_v, double capacitance_f, double resistance_ohm) {
    if (!(voltage_v > 0.0) || !(capacitance_f > 0.0) || !(resistance_ohm > 0.0))
        throw InvalidArgument("voltage, capacitance and resistance must all be positive");
    OperatingPoint op;
    op.voltage_v = voltage_v;
    op.capacitance_f = capacitance_f;
    op.resistance_ohm = resistance_ohm;
    op.charge_c = voltage_v * capacitance_f;
    op.time_constant_s = resistance_ohm * capacitance_f;
    op.frequency_hz = 1.0 / op.time_constant_s;
    op.current_a = op.charge_c / op.time_constant_s;
    op.power_w = op.current_a * op.current_a * resistance_ohm;
    op.energy_per_op_j = op.power_w * op.time_constant_s;
    op.electron_count = op.charge_c / constants::elementary_charge_c;
    return op;
}

ScaledPoint scale_operating_point(const OperatingPoint& op, double slowdown) {
    if (!(slowdown >= 1.0)) throw InvalidArgument("slowdown must be >= 1");
    ScaledPoint p;
    p.slowdown = slowdown;
    p.voltage_v = op.voltage_v;
    p.resistance_ohm = op.resistance_ohm;
    p.frequency_hz = op.frequency_hz / slowdown;
    p.current_a = op.current_a / slowdown;
    p.power_w = op.power_w / (slowdown * slowdown);
    p.energy_per_op_j = op.energy_per_op_j / slowdown;
    return p;
}

LandauerCheck landauer_check(double energy_per_op_j, double temperature_k) {
    if (!(temperature_k > 0.0)) throw InvalidArgument("temperature must be positive");
    LandauerCheck out;
    out.kt_j = constants::boltzmann_j_per_k * temperature_k;
    out.kt_ln2_j = out.kt_j * std::numbers::ln2;
    out.energy_per_op_j = energy_per_op_j;
    out.below_limit = energy_per_op_j < out.kt_ln2_j;
    return out;
}

SystemReport system_report(const ScalingScenario& scenario,
                           const OperatingPoint& base,
                           double temperature_k) {
    if (!(scenario.device_count >= 1.0)) throw InvalidArgument("device count must be >= 1");
    if (scenario.volume_per_device_nm3 < 0.0)
        throw InvalidArgument("per-device volume must be >= 0");

    const ScaledPoint device = scale_operating_point(base, scenario.slowdown);

    SystemReport rep;
    rep.total_power_w = scenario.device_count * device.power_w;
    rep.total_ops_per_second = scenario.device_count * device.frequency_hz;
    rep.energy_per_op_j = rep.total_power_w / rep.total_ops_per_second;
    rep.total_volume_cm3 = scenario.device_count * scenario.volume_per_device_nm3 * 1e-21;
    rep.landauer = landauer_check(rep.energy_per_op_j, temperature_k);
    if (rep.total_power_w > 1.0)
        rep.hiroshima_seconds = constants::hiroshima_j / rep.total_power_w;
    return rep;
}

} // namespace nanofet
