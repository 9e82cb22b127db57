// Acceptance suite: every release criterion, one pass/fail line each.
// Exit status is the number of failing criteria.

#include <array>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "nanofet/assembly.hpp"
#include "nanofet/census.hpp"
#include "nanofet/chirality.hpp"
#include "nanofet/cnt.hpp"
#include "nanofet/constants.hpp"
#include "nanofet/electronic.hpp"
#include "nanofet/energetics.hpp"
#include "nanofet/errors.hpp"
#include "nanofet/fitting.hpp"
#include "nanofet/lonsdaleite.hpp"
#include "nanofet/passivate.hpp"
#include "nanofet/performance.hpp"
#include "nanofet/repro.hpp"
#include "nanofet/structure.hpp"
#include "nanofet/table.hpp"
#include "nanofet/volume.hpp"
#include "nanofet/xyz.hpp"

using namespace nanofet;

namespace {

int failures = 0;

void criterion(int number, const char* title, bool pass, const std::string& detail) {
    std::printf("%s criterion %2d: %s  (%s)\n", pass ? "PASS" : "FAIL", number, title,
                detail.c_str());
    if (!pass) ++failures;
}

bool within(double value, double target, double rel) {
    return std::abs(value - target) <= rel * std::abs(target);
}

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

} // namespace

int main() {
    // 1. cylindrical capacitance from the published inputs
    {
        const double c = capacitance_farads(CapacitorGeometry(0.335, 1.23, 4.7, 5.7));
        criterion(1, "capacitance within 5% of 1.2e-18 F", within(c, 1.2e-18, 0.05),
                  fmt("C = %.5e F", c));
    }

    // 2. RC chain
    const OperatingPoint op = operating_point(1.0, 1e-18, 4.0 * 25813.0);
    criterion(2, "tau within 10% of 1e-13 s, f within 10% of 10 THz",
              within(op.time_constant_s, 1e-13, 0.10) && within(op.frequency_hz, 1e13, 0.10),
              fmt("tau = %.5e s, f = %.5e Hz", op.time_constant_s, op.frequency_hz));

    // 3. heat chain
    criterion(3, "I, P, E within 10% of 1e-5 A, 1e-5 W, 1e-18 J",
              within(op.current_a, 1e-5, 0.10) && within(op.power_w, 1e-5, 0.10) &&
                  within(op.energy_per_op_j, 1e-18, 0.10),
              fmt("I = %.5e A, P = %.5e W, E = %.5e J", op.current_a, op.power_w,
                  op.energy_per_op_j));

    // 4. slowed cube scenario with the Landauer check
    {
        const SystemReport rep = system_report({1e6, 1e18, 1000.0}, op, 300.0);
        const bool pass = within(rep.total_power_w, 10.0, 0.10) &&
                          within(rep.total_ops_per_second, 1e25, 0.10) &&
                          within(rep.energy_per_op_j, 1e-24, 0.10) &&
                          rep.landauer.below_limit &&
                          within(rep.landauer.kt_j, 4.14e-21, 0.01);
        criterion(4, "slowed cube: 10 W, 1e25 ops/s, 1e-24 J/op, below kT ln2", pass,
                  fmt("P = %.5e W, ops = %.5e, E = %.5e J, kT = %.5e J", rep.total_power_w,
                      rep.total_ops_per_second, rep.energy_per_op_j, rep.landauer.kt_j));
    }

    // 5. full-speed cube
    {
        const SystemReport rep = system_report({1.0, 1e18, 1000.0}, op, 300.0);
        const double hseconds = rep.hiroshima_seconds.value_or(-1.0);
        criterion(5, "full-speed cube: 1e13 W, energy-release interval in [6.0, 6.6] s",
                  within(rep.total_power_w, 1e13, 0.10) && hseconds >= 6.0 && hseconds <= 6.6,
                  fmt("P = %.5e W, interval = %.4f s", rep.total_power_w, hseconds));
    }

    // 6. gap extrapolation from the bundled series
    {
        const GapSeries series{{{1, 7.961}, {2, 7.393}, {5, 6.825}, {10, 6.571}, {20, 6.462}},
                               "channel"};
        const FitResult fit = extrapolate_gap(series);
        criterion(6, "g_infinity in [6.35, 6.55] eV with rms residual < 0.1 eV",
                  fit.g_infinity_ev >= 6.35 && fit.g_infinity_ev <= 6.55 &&
                      fit.rms_residual_ev < 0.1,
                  fmt("g_inf = %.4f eV, rms = %.4f eV", fit.g_infinity_ev, fit.rms_residual_ev));
    }

    // 7. energetics tables
    {
        bool pass = true;
        const std::array<std::array<double, 5>, 5> rows{{
            {2, 1.2601, -1.8363, 0.6300, -0.9182},
            {4, 1.7550, -3.1285, 0.4388, -0.7821},
            {6, 1.9485, -4.6998, 0.3248, -0.7833},
            {8, 2.3873, -6.0269, 0.2984, -0.7534},
            {10, 3.2576, -6.9308, 0.3258, -0.6931},
        }};
        for (const auto& row : rows) {
            const PerUnitEnergy per =
                per_unit_energy({static_cast<int>(row[0]), row[1], row[2]});
            pass = pass && std::abs(per.uncorrected_ev - row[3]) <= 5.0e-5 + 1e-12;
            pass = pass && std::abs(per.dispersion_ev - row[4]) <= 5.0e-5 + 1e-12;
        }
        const LevelOffset b3lyp =
            component_offset({-5.9451, 0.7339, "ch"}, {-5.4523, 0.6340, "ins"});
        const LevelOffset cam =
            component_offset({-7.4052, 1.8667, "ch"}, {-6.8697, 1.7246, "ins"});
        pass = pass && std::abs(b3lyp.delta_homo_ev - (-0.4928)) <= 5.0e-5 + 1e-12;
        pass = pass && std::abs(b3lyp.delta_lumo_ev - 0.0999) <= 5.0e-5 + 1e-12;
        pass = pass && std::abs(cam.delta_homo_ev - (-0.5355)) <= 5.0e-5 + 1e-12;
        pass = pass && std::abs(cam.delta_lumo_ev - 0.1421) <= 5.0e-5 + 1e-12;

        const double gap_b = orbital_gap({{-4.579, -2.386}, 1, "B3LYP"}).gap_ev;
        const double gap_c = orbital_gap({{-5.501, -1.518}, 1, "CAM-B3LYP"}).gap_ev;
        pass = pass && std::abs(gap_b - 2.19) <= 0.01 && std::abs(gap_c - 3.98) <= 0.01;

        criterion(7, "10 per-unit entries, both offset rows, both frontier gaps", pass,
                  fmt("gaps %.3f / %.3f eV", gap_b, gap_c));
    }

    // 8. exhaustive metallicity vs zone folding, n <= 30
    {
        const TightBindingParams params{2.7, constants::graphene_cc_nm, 128};
        bool pass = true;
        std::string first_bad = "none";
        for (int n = 1; n <= 30 && pass; ++n) {
            for (int m = 0; m <= n && pass; ++m) {
                const ChiralIndices c(n, m);
                const double gap = zone_folded_gap_ev(c, params);
                const bool metallic = classify_metallicity(c) == Metallicity::Metallic;
                if (metallic != (gap <= 1e-9)) {
                    pass = false;
                    first_bad = c.to_string();
                }
                if (!metallic) {
                    const double diameter = cnt_diameter_nm(c);
                    if (diameter > 0.7) {
                        const double kp = 2.0 * params.hopping_ev * params.a_cc_nm / diameter;
                        const double rule = gap_estimate_ev(diameter);
                        if (std::abs(gap - kp) / kp > 0.10 ||
                            std::abs(gap - rule) / rule > 0.20) {
                            pass = false;
                            first_bad = c.to_string();
                        }
                    }
                }
            }
        }
        const double analytic40 = gap_estimate_ev(cnt_diameter_nm(ChiralIndices(4, 0)));
        pass = pass && analytic40 >= 2.5 && analytic40 <= 2.8;
        criterion(8, "zone folding vs metallicity exhaustive to n = 30; gap rules hold", pass,
                  fmt("first failure %s; (4,0) analytic = %.3f eV", first_bad.c_str(),
                      analytic40));
    }

    // 9. geometry: cells, bond length, passivation census, device envelope
    {
        bool pass = build_cnt(ChiralIndices(4, 4), 1).size() == 16 &&
                    build_cnt(ChiralIndices(20, 20), 1).size() == 80;

        const MolecularStructure block =
            build_lonsdaleite(LonsdaleiteSpec::with_defaults({3, 3, 3}));
        const BondGraph g = bond_graph(block);
        double nn = 1.0;
        for (const auto& [i, j] : g.edges)
            nn = std::min(nn, distance(block.atoms[i].position_nm, block.atoms[j].position_nm));
        pass = pass && std::abs(nn - 0.154) <= 0.002;

        const DeviceComponents parts = assemble_components(paper_like_device());
        pass = pass && bond_census(parts.channel).undercoordinated_carbons() == 0;
        pass = pass && bond_census(parts.insulator).undercoordinated_carbons() == 0;
        pass = pass && bond_census(passivate_hydrogen(block)).undercoordinated_carbons() == 0;

        const MolecularStructure device = assemble_device(paper_like_device());
        const double volume = vdw_volume_nm3(device, 0.02);
        pass = pass && within(static_cast<double>(device.size()), 7694.0, 0.20);
        pass = pass && within(volume, 46.52, 0.15);

        criterion(9, "cell counts, 0.154 nm bonds, clean passivation, device envelope", pass,
                  fmt("nn = %.4f nm, device = %zu atoms, vdW = %.2f nm^3", nn, device.size(),
                      volume));
    }

    // 10. insulator gap metrics and breakdown voltages
    {
        const GapMetrics gaps = gap_metrics(1.4, 0.2, 0.34);
        const bool pass = std::abs(gaps.nuclear_gap_nm - 1.2) < 1e-12 &&
                          std::abs(gaps.adjusted_gap_nm - 0.86) < 1e-12 &&
                          std::abs(breakdown_voltage_v(gaps.nuclear_gap_nm, 1.0) - 1.2) < 1e-12 &&
                          std::abs(breakdown_voltage_v(gaps.adjusted_gap_nm, 1.0) - 0.86) < 1e-12;
        criterion(10, "gap metrics (1.2, 0.86) nm and breakdown (1.2, 0.86) V", pass,
                  fmt("nuclear = %.6f nm, adjusted = %.6f nm", gaps.nuclear_gap_nm,
                      gaps.adjusted_gap_nm));
    }

    // 11. 1000-case round trips and the full reproduction report
    {
        std::mt19937 rng(777);
        std::uniform_int_distribution<int> atom_count(0, 25);
        std::uniform_real_distribution<double> coord(-40.0, 40.0);
        std::uniform_int_distribution<int> kind(0, 1);
        bool xyz_ok = true;
        for (int trial = 0; trial < 1000 && xyz_ok; ++trial) {
            MolecularStructure s;
            s.label = "round-trip";
            const int n = atom_count(rng);
            for (int i = 0; i < n; ++i)
                s.atoms.push_back({kind(rng) ? Element::C : Element::H,
                                   {coord(rng), coord(rng), coord(rng)}});
            const MolecularStructure back = read_xyz(write_xyz(s));
            xyz_ok = xyz_ok && back.size() == s.size();
            for (std::size_t i = 0; xyz_ok && i < s.size(); ++i) {
                xyz_ok = back.atoms[i].element == s.atoms[i].element &&
                         std::abs(back.atoms[i].position_nm.x - s.atoms[i].position_nm.x) < 1e-6 &&
                         std::abs(back.atoms[i].position_nm.y - s.atoms[i].position_nm.y) < 1e-6 &&
                         std::abs(back.atoms[i].position_nm.z - s.atoms[i].position_nm.z) < 1e-6;
            }
        }

        std::uniform_int_distribution<int> cols(1, 5), rows(0, 6);
        std::uniform_int_distribution<int> expo(-9, 9);
        std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
        bool csv_ok = true;
        for (int trial = 0; trial < 1000 && csv_ok; ++trial) {
            TableDocument doc;
            const int c = cols(rng);
            for (int j = 0; j < c; ++j) doc.header.push_back("col" + std::to_string(j));
            const int r = rows(rng);
            for (int i = 0; i < r; ++i) {
                std::vector<double> row;
                for (int j = 0; j < c; ++j)
                    row.push_back(mantissa(rng) * std::pow(10.0, expo(rng)));
                doc.rows.push_back(row);
            }
            const TableDocument back = read_table(write_table(doc));
            csv_ok = csv_ok && back.rows.size() == doc.rows.size();
            for (std::size_t i = 0; csv_ok && i < doc.rows.size(); ++i)
                for (std::size_t j = 0; csv_ok && j < doc.rows[i].size(); ++j)
                    csv_ok = std::abs(back.rows[i][j] - doc.rows[i][j]) <=
                             1e-11 * std::abs(doc.rows[i][j]);
        }

        bool repro_ok = false;
        std::string repro_detail = "library";
        try {
            const char* env = std::getenv("NANOFET_DATA_DIR");
            const ReproReport report = run_paper_repro(env && *env ? env : "data");
            repro_ok = report.all_pass;
            int passed = 0;
            for (const auto& row : report.rows) passed += row.pass ? 1 : 0;
            repro_detail = fmt("repro %d/%zu rows", passed, report.rows.size());
        } catch (const Error& e) {
            repro_detail = std::string("repro error: ") + e.name();
        }

        criterion(11, "1000x XYZ and CSV round trips; reproduction report all green",
                  xyz_ok && csv_ok && repro_ok,
                  fmt("xyz %s, csv %s, %s", xyz_ok ? "ok" : "bad", csv_ok ? "ok" : "bad",
                      repro_detail.c_str()));
    }

    std::printf("%s: %d criterion(s) failing\n", failures == 0 ? "ALL PASS" : "FAILURES",
                failures);
    return failures;
}
