// nanofet: build, measure and analyze molecular-FET component geometries
// and the device performance envelope. One subcommand per library
// operation; see --help on any subcommand.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nanofet/assembly.hpp"
#include "nanofet/carve.hpp"
#include "nanofet/census.hpp"
#include "nanofet/chirality.hpp"
#include "nanofet/cnt.hpp"
#include "nanofet/constants.hpp"
#include "nanofet/electronic.hpp"
#include "nanofet/energetics.hpp"
#include "nanofet/errors.hpp"
#include "nanofet/fitting.hpp"
#include "nanofet/lonsdaleite.hpp"
#include "nanofet/materials.hpp"
#include "nanofet/passivate.hpp"
#include "nanofet/performance.hpp"
#include "nanofet/repro.hpp"
#include "nanofet/table.hpp"
#include "nanofet/volume.hpp"
#include "nanofet/xyz.hpp"

namespace {

using namespace nanofet;

// scientific notation, six significant digits, per the output convention
std::string sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.5e", v);
    return buf;
}

std::string load_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MissingData("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot open output file for writing: " + path);
    out << text;
}

MolecularStructure load_structure(const std::string& path) {
    return read_xyz(load_text(path));
}

Vec3 to_vec3(const std::vector<double>& v) {
    return {v[0], v[1], v[2]};
}

struct PerfInputs {
    double voltage = 1.0;
    double capacitance = 0.0;          // 0: derive from geometry flags
    std::vector<double> cap_geom;      // a, b, L in nm
    double kappa = constants::diamond_kappa;
    double resistance = 0.0;           // 0: derive from junctions
    int junctions = 4;
    double quantum_r = constants::quantum_resistance_ohm;
};

void add_perf_inputs(CLI::App* cmd, PerfInputs& in) {
    cmd->add_option("--voltage", in.voltage, "gate voltage [V]")->capture_default_str();
    cmd->add_option("--capacitance", in.capacitance, "gate capacitance [F]");
    cmd->add_option("--cap-geometry", in.cap_geom,
                    "inner radius, outer radius, length [nm] of the coaxial capacitor")
        ->expected(3);
    cmd->add_option("--kappa", in.kappa, "dielectric constant")->capture_default_str();
    cmd->add_option("--resistance", in.resistance, "total resistance [ohm]");
    cmd->add_option("--junctions", in.junctions, "junction count for the resistance model")
        ->capture_default_str();
    cmd->add_option("--quantum-r", in.quantum_r, "per-junction resistance [ohm]")
        ->capture_default_str();
}

double resolve_capacitance(const PerfInputs& in, std::string* desc = nullptr) {
    if (in.capacitance > 0.0) {
        if (desc) *desc = "given directly";
        return in.capacitance;
    }
    if (in.cap_geom.size() == 3) {
        const CapacitorGeometry g(in.cap_geom[0], in.cap_geom[1], in.cap_geom[2], in.kappa);
        if (desc)
            *desc = "coaxial a=" + sci(g.inner_radius_nm) + " nm, b=" + sci(g.outer_radius_nm) +
                    " nm, L=" + sci(g.length_nm) + " nm, kappa=" + sci(g.dielectric_constant);
        return capacitance_farads(g);
    }
    throw InvalidArgument("supply --capacitance or --cap-geometry a b L");
}

double resolve_resistance(const PerfInputs& in) {
    if (in.resistance > 0.0) return in.resistance;
    return junction_resistance_ohm({in.junctions, in.quantum_r});
}

void print_operating_point(const OperatingPoint& op) {
    std::cout << "operating point at " << sci(op.voltage_v) << " V, C = " << sci(op.capacitance_f)
              << " F, R = " << sci(op.resistance_ohm) << " ohm\n"
              << "  charge:        " << sci(op.charge_c) << " C (" << sci(op.electron_count)
              << " electrons)\n"
              << "  time constant: " << sci(op.time_constant_s) << " s\n"
              << "  frequency:     " << sci(op.frequency_hz) << " Hz\n"
              << "  current:       " << sci(op.current_a) << " A\n"
              << "  power:         " << sci(op.power_w) << " W\n"
              << "  energy/op:     " << sci(op.energy_per_op_j) << " J\n";
}

void print_structure_summary(const MolecularStructure& s) {
    std::cout << "atoms: " << s.size() << " (C " << s.count(Element::C) << ", H "
              << s.count(Element::H) << ")\n";
}

int run(int argc, char** argv) {
    CLI::App app{"molecular-FET geometry and performance toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key=value config file merged under explicit flags");

    // ---- build-cnt ----
    auto* cmd_cnt = app.add_subcommand("build-cnt", "generate a carbon nanotube");
    int cnt_n = 4, cnt_m = 4, cnt_cells = 1;
    std::string cnt_out;
    cmd_cnt->add_option("--n", cnt_n, "chiral index n")->required();
    cmd_cnt->add_option("--m", cnt_m, "chiral index m")->required();
    cmd_cnt->add_option("--cells", cnt_cells, "unit cells along the axis")->capture_default_str();
    cmd_cnt->add_option("--out", cnt_out, "output XYZ path")->required();

    // ---- build-lonsdaleite ----
    auto* cmd_lons = app.add_subcommand("build-lonsdaleite", "generate a hexagonal-diamond block");
    int lons_ra = 1, lons_rb = 1, lons_rc = 1;
    double lons_a = constants::lonsdaleite_a_nm, lons_c = constants::lonsdaleite_c_nm;
    std::string lons_out;
    cmd_lons->add_option("--ra", lons_ra, "repeats along a1")->capture_default_str();
    cmd_lons->add_option("--rb", lons_rb, "repeats along a2")->capture_default_str();
    cmd_lons->add_option("--rc", lons_rc, "repeats along c")->capture_default_str();
    cmd_lons->add_option("--a", lons_a, "basal lattice constant [nm]")->capture_default_str();
    cmd_lons->add_option("--c", lons_c, "axial lattice constant [nm]")->capture_default_str();
    cmd_lons->add_option("--out", lons_out, "output XYZ path")->required();

    // ---- carve ----
    auto* cmd_carve = app.add_subcommand("carve", "keep atoms inside a cylinder or annulus");
    std::string carve_in, carve_out;
    std::vector<double> carve_axis{0.0, 0.0, 1.0}, carve_origin{0.0, 0.0, 0.0};
    double carve_ri = 0.0, carve_ro = 0.0, carve_len = 0.0;
    cmd_carve->add_option("--in", carve_in, "input XYZ")->required();
    cmd_carve->add_option("--out", carve_out, "output XYZ")->required();
    cmd_carve->add_option("--axis", carve_axis, "carve axis (three components)")->expected(3);
    cmd_carve->add_option("--origin", carve_origin, "axis origin [nm] (three components)")
        ->expected(3);
    cmd_carve->add_option("--r-inner", carve_ri, "inner radius [nm]")->capture_default_str();
    cmd_carve->add_option("--r-outer", carve_ro, "outer radius [nm]")->required();
    cmd_carve->add_option("--length", carve_len, "axial window length [nm]")->required();

    // ---- passivate ----
    auto* cmd_pass = app.add_subcommand("passivate", "cap dangling carbons with hydrogen");
    std::string pass_in, pass_out;
    cmd_pass->add_option("--in", pass_in, "input XYZ")->required();
    cmd_pass->add_option("--out", pass_out, "output XYZ")->required();

    // ---- assemble ----
    auto* cmd_asm = app.add_subcommand("assemble", "build a complete device");
    bool asm_paper = false, asm_channel_leads = false;
    int asm_lead_n = 4, asm_lead_m = 4, asm_gate_n = 20, asm_gate_m = 20, asm_repeats = 16;
    double asm_lead_len = 1.5, asm_gate_len = 5.4;
    double asm_ins_ri = 0.60, asm_ins_ro = 1.06, asm_ins_len = 7.6, asm_ins_z = 0.319;
    std::string asm_out;
    cmd_asm->add_flag("--paper-like", asm_paper, "use the reference mFET recipe");
    cmd_asm->add_flag("--channel-leads-only", asm_channel_leads,
                      "reference channel + leads sub-assembly");
    cmd_asm->add_option("--lead-n", asm_lead_n)->capture_default_str();
    cmd_asm->add_option("--lead-m", asm_lead_m)->capture_default_str();
    cmd_asm->add_option("--gate-n", asm_gate_n)->capture_default_str();
    cmd_asm->add_option("--gate-m", asm_gate_m)->capture_default_str();
    cmd_asm->add_option("--channel-repeats", asm_repeats, "channel c-axis repeats (0 disables)")
        ->capture_default_str();
    cmd_asm->add_option("--lead-length", asm_lead_len, "lead length [nm] (0 disables)")
        ->capture_default_str();
    cmd_asm->add_option("--gate-length", asm_gate_len, "gate length [nm] (0 disables)")
        ->capture_default_str();
    cmd_asm->add_option("--ins-r-inner", asm_ins_ri, "insulator bore radius [nm]")
        ->capture_default_str();
    cmd_asm->add_option("--ins-r-outer", asm_ins_ro, "insulator outer radius [nm]")
        ->capture_default_str();
    cmd_asm->add_option("--ins-length", asm_ins_len, "insulator length [nm]")
        ->capture_default_str();
    cmd_asm->add_option("--ins-z", asm_ins_z, "insulator axial offset [nm]")
        ->capture_default_str();
    cmd_asm->add_option("--out", asm_out, "output XYZ path");

    // ---- volume ----
    auto* cmd_vol = app.add_subcommand("volume", "van der Waals volume by voxel counting");
    std::string vol_in;
    double vol_voxel = 0.02;
    bool vol_serial = false;
    cmd_vol->add_option("--in", vol_in, "input XYZ")->required();
    cmd_vol->add_option("--voxel", vol_voxel, "voxel edge [nm], in (0.005, 0.05]")
        ->capture_default_str();
    cmd_vol->add_flag("--serial", vol_serial, "use the serial reference kernel");

    // ---- census ----
    auto* cmd_census = app.add_subcommand("census", "coordination and ring statistics");
    std::string census_in;
    int census_max_ring = 12;
    cmd_census->add_option("--in", census_in, "input XYZ")->required();
    cmd_census->add_option("--max-ring", census_max_ring, "largest ring size searched")
        ->capture_default_str();

    // ---- classify ----
    auto* cmd_classify = app.add_subcommand("classify", "metallic or semiconducting");
    int cls_n = 0, cls_m = 0;
    cmd_classify->add_option("--n", cls_n)->required();
    cmd_classify->add_option("--m", cls_m)->required();

    // ---- gap ----
    auto* cmd_gap = app.add_subcommand("gap", "bandgap estimates for a chirality");
    int gap_n = 0, gap_m = 0, gap_samples = 2048;
    double gap_hopping = 2.7;
    bool gap_no_tb = false;
    cmd_gap->add_option("--n", gap_n)->required();
    cmd_gap->add_option("--m", gap_m)->required();
    cmd_gap->add_option("--hopping", gap_hopping, "tight-binding hopping [eV]")
        ->capture_default_str();
    cmd_gap->add_option("--k-samples", gap_samples, "axial grid samples per line")
        ->capture_default_str();
    cmd_gap->add_flag("--no-tb", gap_no_tb, "skip the zone-folded calculation");

    // ---- fit-gap ----
    auto* cmd_fit = app.add_subcommand("fit-gap", "extrapolate a finite-length gap series");
    std::string fit_in, fit_label = "series";
    cmd_fit->add_option("--input", fit_in, "CSV with repeat_units,gap_eV")->required();
    cmd_fit->add_option("--label", fit_label, "series label")->capture_default_str();

    // ---- energetics ----
    auto* cmd_en = app.add_subcommand("energetics", "interaction tables and level offsets");
    std::string en_interactions, en_levels;
    double en_threshold = 0.1;
    cmd_en->add_option("--interactions", en_interactions,
                       "CSV with units,e_uncorrected,e_dispersion");
    cmd_en->add_option("--levels", en_levels,
                       "CSV with component,homo_b3lyp,lumo_b3lyp,homo_camb3lyp,lumo_camb3lyp");
    cmd_en->add_option("--threshold", en_threshold, "tunneling-risk HOMO offset threshold [eV]")
        ->capture_default_str();

    // ---- dos ----
    auto* cmd_dos = app.add_subcommand("dos", "Gaussian-broadened density of states");
    std::string dos_in, dos_out;
    double dos_sigma = 0.1;
    std::vector<double> dos_window;
    int dos_points = 2001;
    cmd_dos->add_option("--spectrum", dos_in, "spectrum CSV (occupied_count directive + levels)")
        ->required();
    cmd_dos->add_option("--sigma", dos_sigma, "broadening width [eV]")->capture_default_str();
    cmd_dos->add_option("--window", dos_window, "grid min and max [eV]")->expected(2);
    cmd_dos->add_option("--points", dos_points, "grid points")->capture_default_str();
    cmd_dos->add_option("--out", dos_out, "output CSV path")->required();

    // ---- perf ----
    auto* cmd_perf = app.add_subcommand("perf", "device performance report");
    PerfInputs perf_in;
    add_perf_inputs(cmd_perf, perf_in);
    double perf_gate_r = 0.0, perf_inner_r = 0.0;
    double perf_vdw = constants::graphite_layer_gap_nm;
    double perf_strength = constants::diamond_strength_v_per_nm;
    cmd_perf->add_option("--gate-radius", perf_gate_r, "gate radius [nm] for gap metrics");
    cmd_perf->add_option("--inner-radius", perf_inner_r, "inner structure radius [nm]");
    cmd_perf->add_option("--vdw-offset", perf_vdw, "vdW gap adjustment [nm]")
        ->capture_default_str();
    cmd_perf->add_option("--strength", perf_strength, "dielectric strength [V/nm]")
        ->capture_default_str();

    // ---- scale ----
    auto* cmd_scale = app.add_subcommand("scale", "current-limited slowdown of a device");
    PerfInputs scale_in;
    double scale_s = 1.0;
    add_perf_inputs(cmd_scale, scale_in);
    cmd_scale->add_option("--slowdown", scale_s, "slowdown factor s >= 1")->required();

    // ---- system ----
    auto* cmd_sys = app.add_subcommand("system", "aggregate many devices");
    PerfInputs sys_in;
    double sys_s = 1.0, sys_devices = 1e18, sys_vol = 1000.0, sys_temp = 300.0;
    add_perf_inputs(cmd_sys, sys_in);
    cmd_sys->add_option("--slowdown", sys_s, "slowdown factor")->capture_default_str();
    cmd_sys->add_option("--devices", sys_devices, "device count")->capture_default_str();
    cmd_sys->add_option("--device-volume", sys_vol, "volume per device [nm^3]")
        ->capture_default_str();
    cmd_sys->add_option("--temperature", sys_temp, "temperature [K]")->capture_default_str();

    // ---- landauer ----
    auto* cmd_land = app.add_subcommand("landauer", "compare an energy to kT ln2");
    double land_e = 0.0, land_t = 300.0;
    cmd_land->add_option("--energy", land_e, "energy per operation [J]")->required();
    cmd_land->add_option("--temperature", land_t, "temperature [K]")->capture_default_str();

    // ---- paper-repro ----
    auto* cmd_repro = app.add_subcommand(
        "paper-repro", "recompute every published headline number and compare");
    std::string repro_dir;
    bool repro_strict_ln = false;
    cmd_repro->add_option("--data-dir", repro_dir,
                          "reference data directory (default: $NANOFET_DATA_DIR or ./data)");
    cmd_repro->add_flag("--strict-ln", repro_strict_ln,
                        "use the exact ln(b/a) instead of the published rounding");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (cmd_cnt->parsed()) {
        const ChiralIndices c(cnt_n, cnt_m);
        const MolecularStructure tube = build_cnt(c, cnt_cells);
        save_text(cnt_out, write_xyz(tube));
        std::cout << "cnt " << c.to_string() << ": diameter " << sci(cnt_diameter_nm(c))
                  << " nm, cell length " << sci(cnt_cell_length_nm(c)) << " nm\n";
        print_structure_summary(tube);
        std::cout << "wrote " << cnt_out << "\n";
    } else if (cmd_lons->parsed()) {
        const LonsdaleiteSpec spec(lons_a, lons_c, {lons_ra, lons_rb, lons_rc});
        const MolecularStructure block = build_lonsdaleite(spec);
        save_text(lons_out, write_xyz(block));
        print_structure_summary(block);
        std::cout << "wrote " << lons_out << "\n";
    } else if (cmd_carve->parsed()) {
        const CarveSpec spec(to_vec3(carve_axis), to_vec3(carve_origin), carve_ri, carve_ro,
                             carve_len);
        const MolecularStructure carved = carve_cylinder(load_structure(carve_in), spec);
        save_text(carve_out, write_xyz(carved));
        print_structure_summary(carved);
        std::cout << "wrote " << carve_out << "\n";
    } else if (cmd_pass->parsed()) {
        const MolecularStructure in = load_structure(pass_in);
        const MolecularStructure out = passivate_hydrogen(in);
        save_text(pass_out, write_xyz(out));
        std::cout << "added " << (out.size() - in.size()) << " hydrogens\n";
        print_structure_summary(out);
        std::cout << "wrote " << pass_out << "\n";
    } else if (cmd_asm->parsed()) {
        DeviceSpec spec = asm_paper ? paper_like_device()
                          : asm_channel_leads
                              ? paper_like_channel_with_leads()
                              : DeviceSpec{ChiralIndices(asm_lead_n, asm_lead_m),
                                           ChiralIndices(asm_gate_n, asm_gate_m),
                                           asm_repeats,
                                           CarveSpec({0.0, 0.0, 1.0}, {0.0, 0.0, asm_ins_z},
                                                     asm_ins_ri, asm_ins_ro, asm_ins_len),
                                           asm_lead_len,
                                           asm_gate_len};
        const DeviceComponents parts = assemble_components(spec);
        const MolecularStructure device = assemble_device(spec);
        std::cout << "channel:    " << parts.channel.size() << " atoms\n"
                  << "leads:      " << parts.lead_source.size() + parts.lead_drain.size()
                  << " atoms\n"
                  << "insulator:  " << parts.insulator.size() << " atoms\n"
                  << "gate:       " << parts.gate.size() << " atoms\n"
                  << "device:     " << device.size() << " atoms\n";
        if (!asm_out.empty()) {
            save_text(asm_out, write_xyz(device));
            std::cout << "wrote " << asm_out << "\n";
        }
    } else if (cmd_vol->parsed()) {
        const MolecularStructure s = load_structure(vol_in);
        const double v = vol_serial ? reference::vdw_volume_nm3(s, vol_voxel)
                                    : vdw_volume_nm3(s, vol_voxel);
        std::cout << "vdW volume: " << sci(v) << " nm^3 (voxel " << sci(vol_voxel) << " nm)\n";
    } else if (cmd_census->parsed()) {
        const BondCensus census = bond_census(load_structure(census_in), census_max_ring);
        for (const auto& [element, hist] : census.coordination) {
            std::cout << "coordination " << element_symbol(element) << ":";
            for (const auto& [deg, count] : hist) std::cout << " " << deg << "->" << count;
            std::cout << "\n";
        }
        if (census.rings.empty()) {
            std::cout << "rings: none up to size " << census.max_ring_size << "\n";
        } else {
            std::cout << "rings:";
            for (const auto& [size, count] : census.rings)
                std::cout << " " << size << "->" << count;
            std::cout << "\n";
        }
    } else if (cmd_classify->parsed()) {
        const ChiralIndices c(cls_n, cls_m);
        std::cout << c.to_string() << ": " << to_string(classify_metallicity(c)) << "\n";
    } else if (cmd_gap->parsed()) {
        const ChiralIndices c(gap_n, gap_m);
        const ChiralGap analytic = gap_for_chirality(c);
        std::cout << c.to_string() << ": " << to_string(analytic.metallicity) << ", diameter "
                  << sci(analytic.diameter_nm) << " nm\n";
        std::cout << "analytic gap (0.8 eV/D rule): " << sci(analytic.gap_ev) << " eV\n";
        if (!gap_no_tb) {
            const TightBindingParams params{gap_hopping, constants::graphene_cc_nm, gap_samples};
            std::cout << "zone-folded gap (t = " << sci(gap_hopping)
                      << " eV): " << sci(zone_folded_gap_ev(c, params)) << " eV\n";
        }
        if (analytic.small_diameter_caveat)
            std::cout << "caveat: D < 0.5 nm; the analytic rule breaks down at this curvature "
                         "and no correction is applied\n";
    } else if (cmd_fit->parsed()) {
        const GapSeries series = gap_series_from_csv(load_text(fit_in), fit_label);
        const FitResult fit = extrapolate_gap(series);
        nlohmann::ordered_json out{{"g_infinity_eV", fit.g_infinity_ev},
                                   {"amplitude_eV", fit.amplitude_ev},
                                   {"rms_residual_eV", fit.rms_residual_ev}};
        std::cout << out.dump(2) << "\n";
    } else if (cmd_en->parsed()) {
        if (en_interactions.empty() && en_levels.empty())
            throw InvalidArgument("supply --interactions and/or --levels");
        if (!en_interactions.empty()) {
            static const std::vector<std::string> header{"units", "e_uncorrected", "e_dispersion"};
            const TableDocument table = read_table(load_text(en_interactions), &header);
            std::vector<std::pair<double, double>> unc, disp;
            std::cout << "units  per-unit uncorrected [eV]  per-unit dispersion-corrected [eV]\n";
            for (const auto& row : table.rows) {
                const InteractionRow irow{static_cast<int>(row[0]), row[1], row[2]};
                const PerUnitEnergy per = per_unit_energy(irow);
                std::cout << irow.repeat_units << "      " << sci(per.uncorrected_ev)
                          << "               " << sci(per.dispersion_ev) << "\n";
                unc.emplace_back(row[0], row[1]);
                disp.emplace_back(row[0], row[2]);
            }
            const LineFit fit_unc = linear_trend(unc);
            const LineFit fit_disp = linear_trend(disp);
            std::cout << "uncorrected trend: " << sci(fit_unc.slope) << " eV/layer (rms "
                      << sci(fit_unc.rms_residual) << " eV)\n";
            std::cout << "dispersion-corrected trend: " << sci(fit_disp.slope)
                      << " eV/layer (rms " << sci(fit_disp.rms_residual) << " eV)\n";
            std::cout << "note: the OLS slope differs from the per-unit ratio often quoted for "
                         "this table; both are reported above\n";
        }
        if (!en_levels.empty()) {
            static const std::vector<std::string> header{"component", "homo_b3lyp", "lumo_b3lyp",
                                                         "homo_camb3lyp", "lumo_camb3lyp"};
            const LabeledTable table = read_labeled_table(load_text(en_levels), &header);
            ComponentLevels ch_b, ins_b, ch_c, ins_c;
            bool have_ch = false, have_ins = false;
            for (const auto& [component, v] : table.rows) {
                if (component == "channel") {
                    ch_b = {v[0], v[1], "channel"};
                    ch_c = {v[2], v[3], "channel"};
                    have_ch = true;
                } else if (component == "insulator") {
                    ins_b = {v[0], v[1], "insulator"};
                    ins_c = {v[2], v[3], "insulator"};
                    have_ins = true;
                }
            }
            if (!have_ch || !have_ins)
                throw InvalidArgument("levels table needs 'channel' and 'insulator' rows");
            const LevelOffset off_b = component_offset(ch_b, ins_b);
            const LevelOffset off_c = component_offset(ch_c, ins_c);
            std::cout << "B3LYP offsets:     dHOMO " << sci(off_b.delta_homo_ev) << " eV, dLUMO "
                      << sci(off_b.delta_lumo_ev) << " eV\n";
            std::cout << "CAM-B3LYP offsets: dHOMO " << sci(off_c.delta_homo_ev) << " eV, dLUMO "
                      << sci(off_c.delta_lumo_ev) << " eV\n";
            const TunnelingRisk risk = tunneling_risk(off_b.delta_homo_ev, en_threshold);
            std::cout << (risk.flagged ? "RISK: " : "ok: ") << risk.narrative << "\n";
        }
    } else if (cmd_dos->parsed()) {
        const OrbitalSpectrum spectrum = spectrum_from_csv(load_text(dos_in), "spectrum");
        DosGrid grid = auto_dos_grid(spectrum, dos_sigma);
        if (dos_window.size() == 2) grid = {dos_window[0], dos_window[1], dos_points};
        grid.points = dos_points;
        const auto curve = dos_broadened(spectrum, dos_sigma, grid);
        save_text(dos_out, dos_to_csv(curve));
        std::cout << "levels: " << spectrum.energies_ev.size() << ", grid [" << sci(grid.min_ev)
                  << ", " << sci(grid.max_ev) << "] eV x " << grid.points << "\n";
        std::cout << "wrote " << dos_out << "\n";
    } else if (cmd_perf->parsed()) {
        std::string cap_desc;
        const double C = resolve_capacitance(perf_in, &cap_desc);
        const double R = resolve_resistance(perf_in);
        std::cout << "capacitance: " << sci(C) << " F (" << cap_desc << ")\n";
        std::cout << "resistance:  " << sci(R) << " ohm\n";
        print_operating_point(operating_point(perf_in.voltage, C, R));
        if (perf_gate_r > 0.0) {
            const GapMetrics gaps = gap_metrics(perf_gate_r, perf_inner_r, perf_vdw);
            std::cout << "gap: nuclear " << sci(gaps.nuclear_gap_nm) << " nm, vdW-adjusted "
                      << sci(gaps.adjusted_gap_nm) << " nm\n";
            const double v_nuc = breakdown_voltage_v(gaps.nuclear_gap_nm, perf_strength);
            const double v_adj = breakdown_voltage_v(gaps.adjusted_gap_nm, perf_strength);
            std::cout << "breakdown: " << sci(v_nuc) << " V (nuclear), " << sci(v_adj)
                      << " V (adjusted) at " << sci(perf_strength) << " V/nm\n";
            std::cout << "-- at the de-rated breakdown voltage --\n";
            print_operating_point(operating_point(v_adj, C, R));
        }
    } else if (cmd_scale->parsed()) {
        const OperatingPoint base = operating_point(scale_in.voltage,
                                                    resolve_capacitance(scale_in),
                                                    resolve_resistance(scale_in));
        const ScaledPoint scaled = scale_operating_point(base, scale_s);
        std::cout << "slowdown " << sci(scaled.slowdown) << " at " << sci(scaled.voltage_v)
                  << " V\n"
                  << "  frequency: " << sci(scaled.frequency_hz) << " Hz\n"
                  << "  current:   " << sci(scaled.current_a) << " A\n"
                  << "  power:     " << sci(scaled.power_w) << " W\n"
                  << "  energy/op: " << sci(scaled.energy_per_op_j) << " J\n";
    } else if (cmd_sys->parsed()) {
        const OperatingPoint base = operating_point(sys_in.voltage,
                                                    resolve_capacitance(sys_in),
                                                    resolve_resistance(sys_in));
        const ScalingScenario scenario{sys_s, sys_devices, sys_vol};
        const SystemReport rep = system_report(scenario, base, sys_temp);
        std::cout << "devices: " << sci(scenario.device_count) << ", slowdown "
                  << sci(scenario.slowdown) << "\n"
                  << "  total power:   " << sci(rep.total_power_w) << " W\n"
                  << "  total ops/s:   " << sci(rep.total_ops_per_second) << " 1/s\n"
                  << "  energy per op: " << sci(rep.energy_per_op_j) << " J\n"
                  << "  total volume:  " << sci(rep.total_volume_cm3) << " cm^3\n"
                  << "  kT ln2:        " << sci(rep.landauer.kt_ln2_j) << " J ("
                  << sci(rep.landauer.kt_j) << " J kT at " << sci(sys_temp) << " K)\n"
                  << "  below Landauer limit: " << (rep.landauer.below_limit ? "yes" : "no")
                  << "\n";
        if (rep.hiroshima_seconds)
            std::cout << "  seconds per 6.3e13 J released: " << sci(*rep.hiroshima_seconds)
                      << " s\n";
    } else if (cmd_land->parsed()) {
        const LandauerCheck check = landauer_check(land_e, land_t);
        std::cout << "kT:        " << sci(check.kt_j) << " J\n"
                  << "kT ln2:    " << sci(check.kt_ln2_j) << " J\n"
                  << "energy/op: " << sci(check.energy_per_op_j) << " J\n"
                  << "below Landauer limit: " << (check.below_limit ? "yes" : "no") << "\n";
    } else if (cmd_repro->parsed()) {
        const ReproReport report = run_paper_repro(resolve_data_dir(repro_dir), repro_strict_ln);
        for (const std::string& warning : report.warnings)
            std::cerr << "warning: " << warning << "\n";
        std::cout << format_report(report);
        return report.all_pass ? 0 : 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const nanofet::Error& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
