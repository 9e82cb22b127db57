// Times the OpenMP kernels against their serial reference implementations
// on representative workloads and checks they agree.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nanofet/assembly.hpp"
#include "nanofet/chirality.hpp"
#include "nanofet/electronic.hpp"
#include "nanofet/lonsdaleite.hpp"
#include "nanofet/structure.hpp"
#include "nanofet/volume.hpp"

using namespace nanofet;

namespace {

template <typename F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* kernel, double serial_ms, double parallel_ms, bool agree) {
    std::printf("%-22s serial %9.1f ms   parallel %9.1f ms   speedup %5.2fx   %s\n", kernel,
                serial_ms, parallel_ms, serial_ms / parallel_ms, agree ? "agree" : "MISMATCH");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled (serial build)\n");
#endif

    // vdW volume on a mid-sized block (the brute-force reference is O(voxels x atoms))
    {
        const MolecularStructure block =
            build_lonsdaleite(LonsdaleiteSpec::with_defaults({6, 6, 6}));
        double v_ref = 0.0, v_par = 0.0;
        const double ms_ref = time_ms([&] { v_ref = reference::vdw_volume_nm3(block, 0.02); });
        const double ms_par = time_ms([&] { v_par = vdw_volume_nm3(block, 0.02); });
        report("vdw volume", ms_ref, ms_par, v_ref == v_par);
    }

    // zone-folded gaps over a chirality batch
    {
        std::vector<ChiralIndices> batch;
        for (int n = 4; n <= 24; ++n)
            for (int m = 0; m <= n; m += 3) batch.emplace_back(n, m);
        const TightBindingParams fast{2.7, constants::graphene_cc_nm, 512};
        const TightBindingParams dense{2.7, constants::graphene_cc_nm, 4096};
        std::vector<double> gaps_ref(batch.size()), gaps_par(batch.size());
        const double ms_ref = time_ms([&] {
            for (std::size_t i = 0; i < batch.size(); ++i)
                gaps_ref[i] = reference::zone_folded_gap_ev(batch[i], dense);
        });
        const double ms_par = time_ms([&] {
            for (std::size_t i = 0; i < batch.size(); ++i)
                gaps_par[i] = zone_folded_gap_ev(batch[i], fast);
        });
        bool agree = true;
        for (std::size_t i = 0; i < batch.size(); ++i)
            agree = agree && std::abs(gaps_ref[i] - gaps_par[i]) < 1e-4;
        report("zone-folded gap", ms_ref, ms_par, agree);
    }

    // bond graph on the assembled device
    {
        const MolecularStructure device = assemble_device(paper_like_device());
        BondGraph g_ref, g_par;
        const double ms_ref = time_ms([&] { g_ref = reference::bond_graph(device); });
        const double ms_par = time_ms([&] { g_par = bond_graph(device); });
        report("bond graph", ms_ref, ms_par, g_ref.edges == g_par.edges);
    }
    return 0;
}
